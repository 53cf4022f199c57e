#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qh/ring.hpp"

namespace qh {

// A^*(P^n) = Z[h]/(h^{n+1}); basis 1, h, ..., h^{n-1}, pt; c1 degree n+1.
RingPresentation projective_space(int n);

// A^*(G(k,n)) on the Schubert basis of partitions in the k x (n-k) box;
// dimension k(n-k), c1 degree n. Structure constants are generated by
// iterated Pieri multiplication over Giambelli determinants and cached.
RingPresentation grassmannian(int k, int n);

// Parse "P3" or "G(2,4)".
RingPresentation parse_space(const std::string& text);

// Horizontal-strip completions: all mu >= lambda with |mu| = |lambda| + p,
// mu/lambda a horizontal strip, mu inside the max_rows x cols box.
std::vector<Partition> pieri_strips(const Partition& lambda, int p, int max_rows, int cols);

// sigma_p cup sigma_lambda, all coefficients 1.
ClassVector pieri(const RingPresentation& pres, const Partition& lambda, int p);

// Jacobi-Trudi determinant det(sigma_{lambda_i + j - i}) as a signed sum of
// monomials in the special classes; a monomial is the sorted list of its
// sigma_p subscripts. Entries with p < 0 or p > cols vanish, sigma_0 = 1.
struct GiambelliPolynomial {
    // (coefficient, multiset of special-class subscripts, each in 1..cols)
    std::vector<std::pair<mpz_class, std::vector<int>>> terms;
    std::string to_string() const;
};

GiambelliPolynomial giambelli(const Partition& lambda, int cols);

// Coefficient of the point class in the iterated cup product.
mpq_class intersection_number(const RingPresentation& pres,
                              const std::vector<ClassVector>& classes);

} // namespace qh
