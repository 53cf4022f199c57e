#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qh/ring.hpp"
#include "qh/schubert.hpp"

using namespace qh;

TEST_CASE("P2 cup products") {
    auto p2 = projective_space(2);
    auto one = p2.basis_class(p2.unit_index());
    auto h = p2.basis_class(p2.index_of_label("h"));
    auto pt = p2.basis_class(p2.index_of_label("pt"));
    CHECK(p2.cup(h, h) == pt);
    CHECK(p2.cup(h, pt).is_zero());
    CHECK(p2.cup(one, h) == h);
    CHECK(p2.cup(one, pt) == pt);
}

TEST_CASE("P3: h2 cup h2 vanishes in codim 4") {
    auto p3 = projective_space(3);
    auto h2 = p3.basis_class(p3.index_of_label("h2"));
    CHECK(p3.cup(h2, h2).is_zero());
}

TEST_CASE("G(2,4): s1 cup s1 = s2 + s1,1") {
    auto g = grassmannian(2, 4);
    auto s1 = g.basis_class(g.index_of_label("s1"));
    ClassVector expected(g.space());
    expected.add(g.index_of_label("s2"), 1);
    expected.add(g.index_of_label("s1,1"), 1);
    CHECK(g.cup(s1, s1) == expected);
}

TEST_CASE("mismatched spaces are rejected") {
    auto p2 = projective_space(2);
    auto p3 = projective_space(3);
    auto a = p2.basis_class(1);
    auto b = p3.basis_class(1);
    CHECK_THROWS_AS(p2.cup(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
}

TEST_CASE("pairing values") {
    auto p2 = projective_space(2);
    auto h = p2.basis_class(p2.index_of_label("h"));
    CHECK(p2.pairing(h, h) == 1);
    CHECK(p2.pairing(p2.basis_class(p2.unit_index()), p2.basis_class(p2.point_index())) == 1);

    auto g = grassmannian(2, 4);
    CHECK(g.pairing(g.basis_class(g.index_of_label("s2")),
                    g.basis_class(g.index_of_label("s1,1"))) == 0);
    CHECK(g.pairing(g.basis_class(g.index_of_label("s2")),
                    g.basis_class(g.index_of_label("s2"))) == 1);
}

TEST_CASE("pairing is symmetric and nondegenerate per graded piece") {
    for (auto pres : {projective_space(3), grassmannian(2, 4), grassmannian(2, 5)}) {
        const int rank = static_cast<int>(pres.rank());
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                CHECK(pres.pairing(pres.basis_class(i), pres.basis_class(j)) ==
                      pres.pairing(pres.basis_class(j), pres.basis_class(i)));
        for (int i = 0; i < rank; ++i) {
            bool hit = false;
            for (int j = 0; j < rank; ++j)
                hit = hit || pres.pairing(pres.basis_class(i), pres.basis_class(j)) != 0;
            CHECK(hit);
        }
    }
}

TEST_CASE("cup is commutative and associative on all basis triples") {
    for (auto pres : {projective_space(2), projective_space(4), grassmannian(2, 4),
                      grassmannian(2, 5)}) {
        const int rank = static_cast<int>(pres.rank());
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) {
                CHECK(pres.cup(pres.basis_class(a), pres.basis_class(b)) ==
                      pres.cup(pres.basis_class(b), pres.basis_class(a)));
                for (int c = 0; c < rank; ++c) {
                    auto left = pres.cup(pres.cup(pres.basis_class(a), pres.basis_class(b)),
                                         pres.basis_class(c));
                    auto right = pres.cup(pres.basis_class(a),
                                          pres.cup(pres.basis_class(b), pres.basis_class(c)));
                    CHECK(left == right);
                }
            }
    }
}

TEST_CASE("structure constants are graded, nonnegative, integral") {
    for (auto pres : {projective_space(5), grassmannian(2, 5), grassmannian(3, 6)}) {
        const int rank = static_cast<int>(pres.rank());
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                const int total = pres.basis_element(i).codim + pres.basis_element(j).codim;
                const auto& prod = pres.structure(i, j);
                if (total > pres.dimension()) CHECK(prod.is_zero());
                for (const auto& [k, c] : prod.coeffs()) {
                    CHECK(pres.basis_element(k).codim == total);
                    CHECK(c > 0);
                    CHECK(c.get_den() == 1);
                }
            }
    }
}

TEST_CASE("diagonal decomposition of P1 and P2") {
    auto p1 = projective_space(1);
    auto d1 = diagonal_decomposition(p1);
    REQUIRE(d1.pairs.size() == 2);
    CHECK(d1.pairs[0].first == p1.basis_class(0));
    CHECK(d1.pairs[0].second == p1.basis_class(1));
    CHECK(d1.pairs[1].first == p1.basis_class(1));
    CHECK(d1.pairs[1].second == p1.basis_class(0));

    auto p2 = projective_space(2);
    auto d2 = diagonal_decomposition(p2);
    REQUIRE(d2.pairs.size() == 3);
    CHECK(d2.pairs[0].second == p2.basis_class(p2.point_index()));
    CHECK(d2.pairs[1].second == p2.basis_class(p2.index_of_label("h")));
    CHECK(d2.pairs[2].second == p2.basis_class(p2.unit_index()));
}

TEST_CASE("G(2,4) diagonal pairs classes with complementary partitions") {
    auto g = grassmannian(2, 4);
    auto d = diagonal_decomposition(g);
    REQUIRE(d.pairs.size() == 6);
    for (const auto& [zeta, dual] : d.pairs) {
        REQUIRE(zeta.coeffs().size() == 1);
        REQUIRE(dual.coeffs().size() == 1);
        const auto& shape = g.basis_element(zeta.coeffs().begin()->first).shape;
        const auto& dual_shape = g.basis_element(dual.coeffs().begin()->first).shape;
        CHECK(dual_shape == shape.complement(2, 2));
        CHECK(dual.coeffs().begin()->second == 1);
    }
}

TEST_CASE("diagonal reproduction identity on every shipped space") {
    std::vector<RingPresentation> spaces;
    for (int n = 1; n <= 6; ++n) spaces.push_back(projective_space(n));
    spaces.push_back(grassmannian(2, 4));
    spaces.push_back(grassmannian(2, 5));
    spaces.push_back(grassmannian(3, 6));
    for (const auto& pres : spaces) {
        auto diag = diagonal_decomposition(pres);
        CHECK(diag.pairs.size() == pres.rank());
        for (int i = 0; i < static_cast<int>(pres.rank()); ++i) {
            const ClassVector alpha = pres.basis_class(i);
            ClassVector rebuilt(pres.space());
            for (const auto& [zeta, dual] : diag.pairs)
                rebuilt += pres.pairing(dual, alpha) * zeta;
            CHECK(rebuilt == alpha);
        }
    }
}

TEST_CASE("pairing matrix is a permutation on complementary degrees") {
    for (auto pres : {grassmannian(2, 4), grassmannian(2, 5), grassmannian(3, 6)}) {
        const int rank = static_cast<int>(pres.rank());
        const int rows = pres.spec().box_rows(), cols = pres.spec().box_cols();
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (pres.basis_element(i).codim + pres.basis_element(j).codim != pres.dimension())
                    continue;
                const bool dual = pres.basis_element(j).shape ==
                                  pres.basis_element(i).shape.complement(rows, cols);
                CHECK(pres.pairing(pres.basis_class(i), pres.basis_class(j)) == (dual ? 1 : 0));
            }
    }
}

TEST_CASE("degenerate pairing is rejected") {
    // x cup x = 0 makes the middle row of the pairing matrix vanish
    std::vector<BasisElement> basis{{"1", 0, Partition{}},
                                    {"x", 1, Partition{1}},
                                    {"pt", 2, Partition{2}}};
    std::vector<ClassVector> structure(9, ClassVector("bad"));
    auto unit_row = [&](int j) {
        ClassVector v("bad");
        v.add(j, 1);
        return v;
    };
    for (int j = 0; j < 3; ++j) {
        structure[static_cast<std::size_t>(j)] = unit_row(j);
        structure[static_cast<std::size_t>(3 * j)] = unit_row(j);
    }
    RingPresentation bad("bad", SpaceSpec{SpaceSpec::Kind::Projective, 1, 2}, 2, 3, basis,
                         structure);
    CHECK_THROWS_AS(diagonal_decomposition(bad), std::invalid_argument);
}

TEST_CASE("class vectors never store zeros") {
    auto p2 = projective_space(2);
    ClassVector v(p2.space());
    v.add(1, mpq_class(1, 2));
    v.add(1, mpq_class(-1, 2));
    CHECK(v.is_zero());
    CHECK(v.coeffs().empty());
    v.set(2, 3);
    v.set(2, 0);
    CHECK(v.coeffs().empty());
}
