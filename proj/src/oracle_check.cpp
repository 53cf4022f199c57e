#include "qh/oracle_check.hpp"

namespace qh {

OracleReport verify_degree_one_oracle(InvariantEngine& engine, int max_free) {
    const RingPresentation& pres = engine.presentation();
    if (pres.spec().kind != SpaceSpec::Kind::Projective || pres.spec().n < 2)
        throw std::invalid_argument("the degree-one oracle covers P^n with n >= 2");
    const int rank = static_cast<int>(pres.rank());

    // proper-subvariety insertions only: codim >= 1
    std::vector<int> proper;
    for (int i = 0; i < rank; ++i)
        if (pres.basis_element(i).codim >= 1) proper.push_back(i);

    OracleReport report;
    const auto fixed_sets = multisets(static_cast<int>(proper.size()), 3);
    for (int m = 0; m <= max_free; ++m) {
        const auto free_sets = multisets(static_cast<int>(proper.size()), m);
        for (const auto& fx : fixed_sets)
            for (const auto& fr : free_sets) {
                std::vector<int> fixed, free_side;
                for (int i : fx) fixed.push_back(proper[static_cast<std::size_t>(i)]);
                for (int i : fr) free_side.push_back(proper[static_cast<std::size_t>(i)]);
                InvariantKey key(pres.space(), 1, fixed, free_side);
                if (!engine.dimension_gate(key)) continue;
                ++report.keys_checked;
                const mpz_class engine_value = engine.mixed_invariant(key);
                std::vector<IncidenceCondition> conditions;
                for (int idx : key.fixed)
                    conditions.push_back(IncidenceCondition::subspace(pres.basis_element(idx).codim));
                for (int idx : key.free_side)
                    conditions.push_back(IncidenceCondition::subspace(pres.basis_element(idx).codim));
                const mpz_class count = lines_meeting(pres.spec().n, conditions);
                if (engine_value != count && report.pass) {
                    report.pass = false;
                    report.first_mismatch = key.to_string(pres) + ": invariant " +
                                            engine_value.get_str() + " vs line count " +
                                            count.get_str();
                }
            }
    }
    return report;
}

} // namespace qh
