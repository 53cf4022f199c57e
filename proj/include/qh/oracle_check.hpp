#pragma once

#include <string>

#include "qh/incidence.hpp"
#include "qh/invariants.hpp"

namespace qh {

struct OracleReport {
    bool pass = true;
    long keys_checked = 0;
    std::string first_mismatch;
};

// Degree-one cross-check on a projective space: every gate-passing key with
// three fixed insertions, free side up to max_free, and all insertions of
// codim >= 1 is compared against the classical line count of its incidence
// conditions.
OracleReport verify_degree_one_oracle(InvariantEngine& engine, int max_free);

} // namespace qh
