#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qh/incidence.hpp"
#include "qh/invariants.hpp"
#include "qh/oracle_check.hpp"
#include "qh/quantum.hpp"
#include "qh/schubert.hpp"

namespace {

const std::vector<std::string> kShippedSpaces = {"P1", "P2", "P3", "P4",    "P5",
                                                 "P6", "G(2,4)", "G(2,5)", "G(3,6)"};

// Split comma-separated class labels; digit groups following an s-label are
// partition continuations, so "s2,1,s1,1" parses as s2,1 and s1,1.
std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& arg : raw) {
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            const bool digits =
                std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
            if (digits && !out.empty() && out.back().size() > 1 && out.back()[0] == 's')
                out.back() += "," + tok;
            else
                out.push_back(tok);
        }
    }
    return out;
}

int run_ring(const std::string& space_text, bool as_json) {
    qh::RingPresentation pres = qh::parse_space(space_text);
    qh::QuantumTable table(pres);
    qh::RelationReport relations = qh::ring_relation(table);
    const int rank = static_cast<int>(pres.rank());

    if (as_json) {
        nlohmann::json j;
        j["space"] = pres.space();
        j["dimension"] = pres.dimension();
        j["c1deg"] = pres.c1deg();
        j["basis"] = nlohmann::json::array();
        for (const auto& b : pres.basis())
            j["basis"].push_back({{"label", b.label}, {"codim", b.codim}});
        nlohmann::json classical = nlohmann::json::object();
        nlohmann::json quantum = nlohmann::json::object();
        for (int i = 0; i < rank; ++i)
            for (int k = i; k < rank; ++k) {
                const std::string key =
                    pres.basis_element(i).label + "*" + pres.basis_element(k).label;
                classical[key] = qh::format_class(
                    pres, pres.cup(pres.basis_class(i), pres.basis_class(k)));
                quantum[key] = qh::format_qseries(pres, table.basis_product(i, k));
            }
        j["classical"] = classical;
        j["quantum"] = quantum;
        j["relations"] = relations.lines;
        j["relations_verified"] = relations.verified;
        std::cout << j.dump(1) << "\n";
        return 0;
    }

    std::cout << "space " << pres.space() << "  dimension " << pres.dimension() << "  c1 degree "
              << pres.c1deg() << "\n\nbasis:\n";
    for (int i = 0; i < rank; ++i)
        std::cout << "  [" << i << "] " << pres.basis_element(i).label << "  codim "
                  << pres.basis_element(i).codim << "\n";
    std::cout << "\nclassical products:\n";
    for (int i = 0; i < rank; ++i)
        for (int k = i; k < rank; ++k)
            std::cout << "  " << pres.basis_element(i).label << " * " << pres.basis_element(k).label
                      << " = "
                      << qh::format_class(pres, pres.cup(pres.basis_class(i), pres.basis_class(k)))
                      << "\n";
    std::cout << "\nquantum products:\n";
    for (int i = 0; i < rank; ++i)
        for (int k = i; k < rank; ++k)
            std::cout << "  " << pres.basis_element(i).label << " * " << pres.basis_element(k).label
                      << " = " << qh::format_qseries(pres, table.basis_product(i, k)) << "\n";
    std::cout << "\nrelations (" << (relations.verified ? "verified" : "NOT VERIFIED") << "):\n";
    for (const auto& line : relations.lines) std::cout << "  " << line << "\n";
    return 0;
}

int run_invariant(const std::string& space_text, int degree,
                  const std::vector<std::string>& fixed_raw,
                  const std::vector<std::string>& free_raw, bool as_json, bool explain,
                  const std::string& cache_path, bool no_cache) {
    qh::RingPresentation pres = qh::parse_space(space_text);
    qh::InvariantEngine engine(pres);
    if (!no_cache) engine.store().load_file(cache_path);
    qh::InvariantKey key =
        engine.make_key(degree, split_labels(fixed_raw), split_labels(free_raw));
    const bool gate = engine.dimension_gate(key);
    engine.reset_stats();
    const mpz_class value = engine.mixed_invariant(key);
    if (explain) {
        long sum = 0;
        for (int idx : key.fixed) sum += pres.basis_element(idx).codim;
        for (int idx : key.free_side) sum += pres.basis_element(idx).codim;
        std::cerr << "gate: codim sum " << sum << " vs c1deg*d + dim + m = " << pres.c1deg() << "*"
                  << degree << " + " << pres.dimension() << " + " << key.free_count() << " = "
                  << pres.c1deg() * degree + pres.dimension() +
                         static_cast<long>(key.free_count())
                  << " -> " << (gate ? "pass" : "fail") << "\n";
        const auto st = engine.stats();
        std::cerr << "recursion depth " << st.max_depth << ", store hits " << st.store_hits
                  << ", misses " << st.store_misses << ", entries " << engine.store().size()
                  << "\n";
    }
    if (as_json) {
        nlohmann::json j;
        j["space"] = pres.space();
        j["d"] = std::to_string(degree);
        j["key"] = key.to_string(pres);
        j["value"] = value.get_str();
        j["gate"] = gate;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    if (!no_cache) engine.store().save_file(cache_path);
    return 0;
}

int run_nd(int max_d) {
    std::cout << " d  N_d\n";
    for (int d = 1; d <= max_d; ++d)
        std::cout << " " << d << "  " << qh::kontsevich_nd(d).get_str() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const std::string& space_text, int max_d, int max_n,
               int max_m, int cutoff) {
    std::vector<std::string> spaces;
    if (!space_text.empty())
        spaces.push_back(space_text);
    else if (suite == "composition")
        spaces = {"P2"};
    else if (suite == "oracle")
        spaces = {"P2", "P3", "P4"};
    else
        spaces = kShippedSpaces;

    bool all_pass = true;
    for (const auto& s : spaces) {
        qh::RingPresentation pres = qh::parse_space(s);
        if (suite == "associativity") {
            qh::QuantumTable table(pres);
            const int c = cutoff > 0 ? cutoff : qh::full_q_cutoff(pres);
            const auto report = qh::verify_associativity(table, c);
            std::cout << "associativity " << pres.space() << ": "
                      << (report.pass ? "PASS" : "FAIL") << " (" << report.triples_checked
                      << " triples, q-cutoff " << report.q_cutoff << ")";
            if (!report.pass) std::cout << " first counterexample " << report.first_counterexample;
            std::cout << "\n";
            all_pass = all_pass && report.pass;
        } else if (suite == "diagonal") {
            const auto diag = qh::diagonal_decomposition(pres);
            bool ok = true;
            for (int i = 0; i < static_cast<int>(pres.rank()); ++i) {
                const qh::ClassVector alpha = pres.basis_class(i);
                qh::ClassVector rebuilt(pres.space());
                for (const auto& [zeta, dual] : diag.pairs)
                    rebuilt += pres.pairing(dual, alpha) * zeta;
                ok = ok && rebuilt == alpha;
            }
            std::cout << "diagonal " << pres.space() << ": " << (ok ? "PASS" : "FAIL") << " ("
                      << diag.pairs.size() << " pairs)\n";
            all_pass = all_pass && ok;
        } else if (suite == "composition") {
            qh::InvariantEngine engine(pres);
            const auto report = qh::verify_composition_law(engine, max_d, max_n, max_m);
            std::cout << "composition " << pres.space() << ": " << (report.pass ? "PASS" : "FAIL")
                      << " (" << report.keys_checked << " keys, " << report.splits_checked
                      << " splittings";
            if (report.keys_skipped > 0) std::cout << ", " << report.keys_skipped << " skipped";
            std::cout << ")";
            if (!report.pass) std::cout << " first discrepancy: " << report.first_discrepancy;
            std::cout << "\n";
            all_pass = all_pass && report.pass;
        } else {  // oracle
            if (pres.spec().kind != qh::SpaceSpec::Kind::Projective || pres.spec().n < 2 ||
                pres.spec().n > 4)
                throw std::invalid_argument("the oracle suite covers P2, P3 and P4");
            qh::InvariantEngine engine(pres);
            const int cap = max_m > 0 ? max_m : 3;
            const auto report = qh::verify_degree_one_oracle(engine, cap);
            std::cout << "oracle " << pres.space() << ": " << (report.pass ? "PASS" : "FAIL")
                      << " (" << report.keys_checked << " degree-1 keys, free side up to " << cap
                      << ")";
            if (!report.pass) std::cout << " first mismatch: " << report.first_mismatch;
            std::cout << "\n";
            all_pass = all_pass && report.pass;
        }
    }
    if (suite == "oracle") {
        bool stable = true;
        for (unsigned long seed = 1; seed <= 5; ++seed)
            stable = stable && qh::conic_through_points(5, seed) == 1;
        std::cout << "oracle conics: " << (stable ? "PASS" : "FAIL")
                  << " (5 resampled general configurations)\n";
        all_pass = all_pass && stable;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qh: exact quantum cohomology of projective spaces and Grassmannians"};
    app.require_subcommand(1);

    auto* ring = app.add_subcommand("ring", "basis, classical and quantum tables, relations");
    std::string ring_space;
    bool ring_json = false;
    ring->add_option("space", ring_space, "space spec: P<n> or G(k,n)")->required();
    ring->add_flag("--json", ring_json, "machine-readable output");

    auto* inv = app.add_subcommand("invariant", "evaluate a mixed enumerative invariant");
    std::string inv_space;
    int inv_degree = 0;
    std::vector<std::string> inv_fixed, inv_free;
    bool inv_json = false, inv_explain = false, inv_no_cache = false;
    std::string cache_path = "./qh_cache.json";
    inv->add_option("space", inv_space, "space spec: P<n> or G(k,n)")->required();
    inv->add_option("-d,--degree", inv_degree, "curve degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    inv->add_option("--fixed", inv_fixed, "fixed-side classes, e.g. pt,pt,h or s2,1")->required();
    inv->add_option("--free", inv_free, "free-side classes");
    inv->add_flag("--json", inv_json, "machine-readable output");
    inv->add_flag("--explain", inv_explain, "gate arithmetic and recursion stats on stderr");
    inv->add_option("--cache", cache_path, "invariant cache file")->envname("QH_CACHE");
    inv->add_flag("--no-cache", inv_no_cache, "do not read or write the cache file");

    auto* nd = app.add_subcommand("nd", "table of plane rational curve counts N_d");
    int nd_max = 1;
    nd->add_option("max_d", nd_max, "largest degree")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite, verify_space;
    int verify_max_d = 2, verify_max_n = 4, verify_max_m = 0, verify_cutoff = 0;
    verify->add_option("suite", verify_suite, "associativity | composition | diagonal | oracle")
        ->required()
        ->check(CLI::IsMember({"associativity", "composition", "diagonal", "oracle"}));
    verify->add_option("--space", verify_space, "restrict to one space");
    verify->add_option("--max-d", verify_max_d, "largest curve degree (composition)");
    verify->add_option("--max-n", verify_max_n, "largest fixed-side arity (composition)");
    verify->add_option("--max-m", verify_max_m, "largest free-side arity");
    verify->add_option("--cutoff", verify_cutoff, "q-exponent cutoff (associativity)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ring) return run_ring(ring_space, ring_json);
        if (*inv)
            return run_invariant(inv_space, inv_degree, inv_fixed, inv_free, inv_json, inv_explain,
                                 cache_path, inv_no_cache);
        if (*nd) return run_nd(nd_max);
        if (*verify)
            return run_verify(verify_suite, verify_space, verify_max_d, verify_max_n, verify_max_m,
                              verify_cutoff);
    } catch (const qh::unsupported_key_error& e) {
        std::cerr << "unsupported key: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
