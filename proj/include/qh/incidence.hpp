#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

namespace qh {

// One incidence condition on lines in P^n: the line must pass through a
// point, or meet a linear subspace of the given codimension.
struct IncidenceCondition {
    int codim = 0;  // in P^n a point has codim n; hyperplanes (codim 1) impose nothing

    static IncidenceCondition point_in(int ambient_dim) { return {ambient_dim}; }
    static IncidenceCondition subspace(int codim) { return {codim}; }
};

// Classical count of lines in P^n meeting every condition, computed as the
// Schubert number prod sigma_{c-1} on G(2, n+1). The conditions must cut the
// (2n-2)-dimensional family of lines to dimension zero; otherwise an error
// names the dimension defect.
mpz_class lines_meeting(int ambient_dim, const std::vector<IncidenceCondition>& conditions);

// Rational point in the affine plane.
using PlanePoint = std::array<mpq_class, 2>;

// No three of the points collinear (exact determinant test).
bool points_in_general_position(const std::vector<PlanePoint>& pts);

// Rank over Q of the 5 x 6 matrix of conic coefficients through the points.
int conic_condition_rank(const std::vector<PlanePoint>& pts);

// Number of conics through `count` general plane points, established by
// sampling a general rational configuration (resampling degenerate ones) and
// exhibiting a rank-5 linear condition matrix. Only count == 5 is meaningful.
int conic_through_points(int count);
int conic_through_points(int count, unsigned long seed);

} // namespace qh
