// Acceptance suite: the shipped guarantees of the engine, one line per
// criterion. Run with no arguments for the full suite or with a number
// 1..10 for a single criterion; the exit code is the number of failures.

#include <cstdio>
#include <memory>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "qh/incidence.hpp"
#include "qh/invariants.hpp"
#include "qh/oracle_check.hpp"
#include "qh/quantum.hpp"
#include "qh/schubert.hpp"
#include "reference_counts.hpp"

using namespace qh;

namespace {

std::vector<RingPresentation> shipped_spaces() {
    std::vector<RingPresentation> out;
    for (int n = 1; n <= 6; ++n) out.push_back(projective_space(n));
    out.push_back(grassmannian(2, 4));
    out.push_back(grassmannian(2, 5));
    out.push_back(grassmannian(3, 6));
    return out;
}

// 1. h^{x(n+1)} = q in P^n for n = 1..6, the seed count checked against the
//    two-point line oracle.
bool criterion_ring_relation(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        auto pn = projective_space(n);
        QuantumTable table(pn);
        const ClassVector h = pn.basis_class(pn.index_of_label("h"));
        QSeries acc(pn.space());
        acc.add_term(0, h);
        for (int i = 0; i < n; ++i) acc = table.product(acc, h);
        QSeries expected(pn.space());
        expected.add_term(1, pn.basis_class(pn.unit_index()));
        if (acc != expected) {
            detail = "h^" + std::to_string(n + 1) + " != q on P" + std::to_string(n);
            return false;
        }
        if (n >= 2) {
            const mpz_class count = lines_meeting(
                n, {IncidenceCondition::point_in(n), IncidenceCondition::point_in(n)});
            const QSeries seed = table.product(h, pn.basis_class(pn.point_index()));
            if (count != 1 || seed.coefficient(1).coeff(pn.unit_index()) != count) {
                detail = "seed count mismatch on P" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "h^(n+1) = q on P1..P6; seed h x h^n matches the two-point line count";
    return true;
}

// 2. The G(2,4) quantum products of the acceptance table, with expected
//    values assembled from the classical cup product plus the independent
//    pencil-geometry counts of reference_counts.hpp.
bool criterion_g24_table(std::string& detail) {
    auto g = grassmannian(2, 4);
    QuantumTable table(g);
    auto diag = diagonal_decomposition(g);
    auto expected = [&](const std::string& la, const std::string& lb) {
        const int ia = g.index_of_label(la), ib = g.index_of_label(lb);
        QSeries s(g.space());
        s.add_term(0, g.cup(g.basis_class(ia), g.basis_class(ib)));
        ClassVector qpart(g.space());
        for (const auto& [zeta, dual] : diag.pairs) {
            const int idual = dual.coeffs().begin()->first;
            if (g.basis_element(ia).codim + g.basis_element(ib).codim +
                    g.basis_element(idual).codim !=
                g.c1deg() + g.dimension())
                continue;
            const long count = g24_degree1_count(
                {la, lb, g.basis_element(idual).label});
            qpart.add(zeta.coeffs().begin()->first, count);
        }
        s.add_term(1, qpart);
        return s;
    };
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"s1", "s2,2"}, {"s2", "s2"}, {"s2", "s1,1"}, {"s1,1", "s1,1"}};
    for (const auto& [a, b] : pairs) {
        const QSeries got = table.basis_product(g.index_of_label(a), g.index_of_label(b));
        if (got != expected(a, b)) {
            detail = a + " x " + b + " = " + format_qseries(g, got) +
                     " differs from the pencil-count prediction " +
                     format_qseries(g, expected(a, b));
            return false;
        }
    }
    detail = "s1xs2,2 = q s1, s2xs2 = s2,2, s2xs1,1 = q, s1,1xs1,1 = s2,2 on G(2,4), "
             "all equal to the incidence-derived table";
    return true;
}

// 3. Exhaustive associativity at the full q-cutoff.
bool criterion_associativity(std::string& detail) {
    long triples = 0;
    for (const auto& pres : shipped_spaces()) {
        if (pres.spec().kind == SpaceSpec::Kind::Projective && pres.spec().n == 6) continue;
        QuantumTable table(pres);
        auto report = verify_associativity(table, full_q_cutoff(pres));
        triples += report.triples_checked;
        if (!report.pass) {
            detail = pres.space() + " fails at " + report.first_counterexample;
            return false;
        }
    }
    detail = "associativity exact on P1..P5, G(2,4), G(2,5), G(3,6) (" +
             std::to_string(triples) + " triples, full q-cutoff)";
    return true;
}

// 4. The Kunneth diagonal reproduces every basis class.
bool criterion_diagonal(std::string& detail) {
    long classes = 0;
    for (const auto& pres : shipped_spaces()) {
        auto diag = diagonal_decomposition(pres);
        for (int i = 0; i < static_cast<int>(pres.rank()); ++i) {
            const ClassVector alpha = pres.basis_class(i);
            ClassVector rebuilt(pres.space());
            for (const auto& [zeta, dual] : diag.pairs)
                rebuilt += pres.pairing(dual, alpha) * zeta;
            if (rebuilt != alpha) {
                detail = "diagonal identity fails for " + pres.basis_element(i).label + " on " +
                         pres.space();
                return false;
            }
            ++classes;
        }
    }
    detail = "sum_l zeta_l <dual_l, a> = a for all " + std::to_string(classes) +
             " basis classes of the shipped spaces";
    return true;
}

// 5. Gate soundness on 1000 random gate-failing keys.
bool criterion_gate(std::string& detail) {
    auto spaces = shipped_spaces();
    std::vector<std::unique_ptr<InvariantEngine>> engines;
    for (const auto& pres : spaces) engines.push_back(std::make_unique<InvariantEngine>(pres));
    std::mt19937 rng(20240229);
    std::uniform_int_distribution<std::size_t> pick(0, spaces.size() - 1);
    std::uniform_int_distribution<int> deg(0, 3), nn(3, 6), mm(0, 4);
    int checked = 0;
    while (checked < 1000) {
        const std::size_t s = pick(rng);
        auto& engine = *engines[s];
        const auto& pres = spaces[s];
        std::uniform_int_distribution<int> idx(0, static_cast<int>(pres.rank()) - 1);
        std::vector<int> fixed, free_side;
        for (int i = nn(rng); i > 0; --i) fixed.push_back(idx(rng));
        for (int i = mm(rng); i > 0; --i) free_side.push_back(idx(rng));
        InvariantKey key(pres.space(), deg(rng), fixed, free_side);
        if (engine.dimension_gate(key)) continue;
        if (engine.mixed_invariant(key) != 0) {
            detail = "nonzero value for gate-failing key " + key.to_string(pres);
            return false;
        }
        ++checked;
    }
    detail = "1000 random gate-failing keys all evaluate to 0";
    return true;
}

// 6. The Kontsevich table N_1..N_8, seeded by the two oracles and a hand
//    evaluation of the recursion at d = 3.
bool criterion_kontsevich(std::string& detail) {
    const mpz_class n1_oracle = lines_meeting(
        2, {IncidenceCondition::point_in(2), IncidenceCondition::point_in(2)});
    const int n2_oracle = conic_through_points(5);
    // recursion at d = 3 by hand: the (d1,d2) = (2,1) term is
    // N_2 N_1 (2^2 1^2 C(5,4) - 2^3 1 C(5,5)) = 4*5 - 8*1 = 12 and the (1,2)
    // term is N_1 N_2 (1^2 2^2 C(5,1) - 1^3 2 C(5,2)) = 4*5 - 2*10 = 0.
    const long n3_hand = (4 * 5 - 8 * 1) + (4 * 5 - 2 * 10);
    const std::vector<mpz_class> expected = {1,
                                             1,
                                             12,
                                             620,
                                             87304,
                                             26312976,
                                             mpz_class("14616808192"),
                                             mpz_class("13525751027392")};
    if (n1_oracle != expected[0] || n2_oracle != expected[1] || n3_hand != expected[2]) {
        detail = "oracle seeds disagree with the table";
        return false;
    }
    for (int d = 1; d <= 8; ++d)
        if (kontsevich_nd(d) != expected[static_cast<std::size_t>(d - 1)]) {
            detail = "N_" + std::to_string(d) + " = " + kontsevich_nd(d).get_str() + " != " +
                     expected[static_cast<std::size_t>(d - 1)].get_str();
            return false;
        }
    detail = "N_1..N_8 = 1, 1, 12, 620, 87304, 26312976, 14616808192, 13525751027392 "
             "(N_1, N_2 oracle-verified, N_3 hand-evaluated)";
    return true;
}

// 7. The composition law: all splittings agree with the memoized values.
bool criterion_composition(std::string& detail) {
    auto p2 = projective_space(2);
    InvariantEngine e2(p2);
    auto r2 = verify_composition_law(e2, 3, 5, 5);
    if (!r2.pass || r2.keys_skipped != 0) {
        detail = "P2 run: " + r2.first_discrepancy;
        return false;
    }
    auto g = grassmannian(2, 4);
    InvariantEngine ge(g);
    auto rg = verify_composition_law(ge, 2, 4, 0);
    if (!rg.pass || rg.keys_skipped != 0) {
        detail = "G(2,4) run: " + rg.first_discrepancy;
        return false;
    }
    detail = "P2 (d<=3, n<=5, m<=5: " + std::to_string(r2.keys_checked) + " keys, " +
             std::to_string(r2.splits_checked) + " splittings) and G(2,4) (d<=2, n=4: " +
             std::to_string(rg.keys_checked) + " keys) agree across all splittings";
    return true;
}

// 8. The 1/(k!(m-k)!)-weighted permutation sum equals the shuffle sum.
bool criterion_normalization(std::string& detail) {
    auto p2 = projective_space(2);
    InvariantEngine engine(p2);
    const std::vector<InvariantKey> keys = {
        engine.make_key(1, {"pt", "h", "h", "h"}, {}),
        engine.make_key(2, {"pt", "pt", "pt", "h"}, {"pt"}),
        engine.make_key(2, {"pt", "pt", "h", "h"}, {"pt", "pt"}),
        engine.make_key(3, {"pt", "pt", "pt", "pt"}, {"pt", "pt", "pt"}),
        engine.make_key(3, {"pt", "pt", "pt", "h"}, {"pt", "pt", "pt", "pt"}),
    };
    for (const auto& key : keys) {
        if (!engine.dimension_gate(key)) {
            detail = "sample key unexpectedly gate-fails: " + key.to_string(p2);
            return false;
        }
        for (const std::vector<int>& left : {std::vector<int>{0, 1}, {0, 2}}) {
            const mpz_class shuffle = engine.composition_split(key, left);
            const mpq_class weighted = engine.composition_split_weighted(key, left);
            if (weighted != shuffle || shuffle != engine.mixed_invariant(key)) {
                detail = "normalization mismatch at " + key.to_string(p2);
                return false;
            }
        }
    }
    detail = "weighted S(m) sums equal shuffle sums for sampled keys with m = 0..4";
    return true;
}

// 9. Degree-1 keys match the classical line counts on P2, P3, P4.
bool criterion_oracle(std::string& detail) {
    long keys = 0;
    for (int n = 2; n <= 4; ++n) {
        auto pn = projective_space(n);
        InvariantEngine engine(pn);
        auto report = verify_degree_one_oracle(engine, 4);
        keys += report.keys_checked;
        if (!report.pass) {
            detail = "P" + std::to_string(n) + ": " + report.first_mismatch;
            return false;
        }
    }
    detail = "all " + std::to_string(keys) +
             " gate-passing degree-1 incidence keys on P2, P3, P4 match the line counts";
    return true;
}

// 10. Classical substrate: the four-line count and the agreement of the two
//     classical multiplication routes.
bool criterion_classical(std::string& detail) {
    auto g24 = grassmannian(2, 4);
    const ClassVector s1 = g24.basis_class(g24.index_of_label("s1"));
    if (intersection_number(g24, {s1, s1, s1, s1}) != 2) {
        detail = "s1^4 != 2 on G(2,4)";
        return false;
    }
    for (const auto& pres : {grassmannian(2, 4), grassmannian(2, 5), grassmannian(3, 6)}) {
        const int rank = static_cast<int>(pres.rank());
        for (int i = 0; i < rank; ++i) {
            // expanding the Giambelli determinant through Pieri from the unit
            // must reproduce the class itself
            auto gp = giambelli(pres.basis_element(i).shape, pres.spec().box_cols());
            ClassVector total(pres.space());
            for (const auto& [coef, mono] : gp.terms) {
                ClassVector acc = pres.basis_class(pres.unit_index());
                for (int p : mono) {
                    ClassVector next(pres.space());
                    for (const auto& [idx, c] : acc.coeffs())
                        next += c * pieri(pres, pres.basis_element(idx).shape, p);
                    acc = next;
                }
                total += mpq_class(coef) * acc;
            }
            if (total != pres.basis_class(i)) {
                detail = "Giambelli expansion fails for " + pres.basis_element(i).label + " on " +
                         pres.space();
                return false;
            }
            for (int j = 0; j < rank; ++j)
                if (pres.structure(i, j) != pres.structure(j, i)) {
                    detail = "structure-constant routes disagree on " + pres.space();
                    return false;
                }
        }
    }
    detail = "s1^4 = 2 on G(2,4); Giambelli and Pieri agree exhaustively on G(2,4), G(2,5), "
             "G(3,6)";
    return true;
}

struct Criterion {
    const char* name;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {"quantum ring relation", criterion_ring_relation},
    {"Grassmannian quantum table", criterion_g24_table},
    {"associativity", criterion_associativity},
    {"diagonal identity", criterion_diagonal},
    {"dimension gate", criterion_gate},
    {"Kontsevich table", criterion_kontsevich},
    {"composition law", criterion_composition},
    {"normalization lemma", criterion_normalization},
    {"oracle equivalence", criterion_oracle},
    {"classical substrate", criterion_classical},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 10) {
            std::fprintf(stderr, "usage: acceptance [1..10]\n");
            return 2;
        }
    }
    int failures = 0;
    for (int i = 1; i <= 10; ++i) {
        if (only && i != only) continue;
        const auto& c = kCriteria[i - 1];
        std::string detail;
        const bool ok = c.run(detail);
        std::printf("[%2d] %s  %s: %s\n", i, ok ? "PASS" : "FAIL", c.name, detail.c_str());
        if (!ok) ++failures;
    }
    if (!only) std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
