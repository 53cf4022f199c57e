#include "qh/incidence.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "qh/schubert.hpp"

namespace qh {

mpz_class lines_meeting(int ambient_dim, const std::vector<IncidenceCondition>& conditions) {
    if (ambient_dim < 2)
        throw std::invalid_argument("lines_meeting needs ambient dimension >= 2");
    long imposed = 0;
    for (const auto& c : conditions) {
        if (c.codim < 1 || c.codim > ambient_dim)
            throw std::invalid_argument("condition codim must lie in 1.." +
                                        std::to_string(ambient_dim));
        imposed += c.codim - 1;
    }
    const long family = 2L * ambient_dim - 2;
    if (imposed != family) {
        const long defect = imposed - family;
        throw std::invalid_argument(
            "conditions " + std::string(defect > 0 ? "overdetermine" : "underdetermine") +
            " the line family by " + std::to_string(defect > 0 ? defect : -defect));
    }
    RingPresentation lines = grassmannian(2, ambient_dim + 1);
    std::vector<ClassVector> classes{lines.basis_class(lines.unit_index())};
    for (const auto& c : conditions)
        if (c.codim >= 2)
            classes.push_back(lines.basis_class(lines.index_of(Partition{c.codim - 1})));
    mpq_class count = intersection_number(lines, classes);
    count.canonicalize();
    if (count.get_den() != 1) throw std::logic_error("non-integral line count");
    return count.get_num();
}

bool points_in_general_position(const std::vector<PlanePoint>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                // affine points are collinear iff det [p_b - p_a | p_c - p_a] = 0
                mpq_class det = (pts[b][0] - pts[a][0]) * (pts[c][1] - pts[a][1]) -
                                (pts[b][1] - pts[a][1]) * (pts[c][0] - pts[a][0]);
                if (det == 0) return false;
            }
    return true;
}

int conic_condition_rank(const std::vector<PlanePoint>& pts) {
    // row per point: coefficients of x^2, xy, y^2, x, y, 1
    std::vector<std::array<mpq_class, 6>> m;
    for (const auto& p : pts)
        m.push_back({p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0], p[1], mpq_class(1)});
    int rank = 0;
    for (int col = 0; col < 6 && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int row = rank; row < static_cast<int>(m.size()); ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        const mpq_class inv = 1 / m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (auto& x : m[static_cast<std::size_t>(rank)]) x *= inv;
        for (int row = 0; row < static_cast<int>(m.size()); ++row) {
            if (row == rank) continue;
            const mpq_class f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < 6; ++j)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

int conic_through_points(int count, unsigned long seed) {
    if (count != 5)
        throw std::invalid_argument("the conic count is established for exactly 5 points");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<PlanePoint> pts;
        for (int i = 0; i < 5; ++i)
            pts.push_back({mpq_class(coord(rng)), mpq_class(coord(rng))});
        if (!points_in_general_position(pts)) continue;  // degenerate sample, redraw
        if (conic_condition_rank(pts) != 5) continue;
        // five independent linear conditions on the 6 conic coefficients:
        // a one-dimensional kernel, hence exactly one conic
        return 1;
    }
    throw std::runtime_error("could not sample a general position in 64 attempts");
}

int conic_through_points(int count) { return conic_through_points(count, 0x5EEDu); }

} // namespace qh
