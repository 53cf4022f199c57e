#pragma once

#include <gmpxx.h>

#include <atomic>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qh/quantum.hpp"
#include "qh/ring.hpp"

namespace qh {

// Raised for well-formed keys outside the validated regime (fewer than three
// fixed insertions, or free insertions a specific space cannot evaluate).
class unsupported_key_error : public std::runtime_error {
public:
    explicit unsupported_key_error(const std::string& what) : std::runtime_error(what) {}
};

// Curve class on a space with a rank-one effective cone: a single degree,
// with c1(X).B = c1deg * degree.
struct CurveClass {
    std::string space;
    int degree = 0;

    CurveClass(std::string space_id, int d) : space(std::move(space_id)), degree(d) {
        if (degree < 0) throw std::invalid_argument("curve class degree must be >= 0");
    }
};

// Canonicalized argument list of the mixed invariant: curve degree plus the
// multisets of basis indices on the fixed and free sides. Symmetry within
// each side is baked in by sorting.
struct InvariantKey {
    std::string space;
    int degree = 0;
    std::vector<int> fixed;
    std::vector<int> free_side;

    InvariantKey() = default;
    InvariantKey(std::string space_id, int d, std::vector<int> fixed_classes,
                 std::vector<int> free_classes);

    void canonicalize();
    std::size_t fixed_count() const { return fixed.size(); }
    std::size_t free_count() const { return free_side.size(); }

    // "P2|2|fixed:pt,pt,pt|free:pt,pt" with labels in basis order
    std::string to_string(const RingPresentation& pres) const;
};

// Memo table for the recursion, keyed by canonical key strings. Reads are
// shared, writes exclusive (single-writer contract).
class InvariantStore {
public:
    std::optional<mpz_class> lookup(const std::string& key) const;
    void insert(const std::string& key, const mpz_class& value);

    long hits() const { return hits_; }
    long misses() const { return misses_; }
    std::size_t size() const;
    void clear();

    std::vector<std::pair<std::string, mpz_class>> snapshot() const;

    // Cache file format (shared with the CLI): one JSON object mapping
    // canonical key strings to decimal value strings.
    void load_file(const std::string& path);       // missing file is fine
    void save_file(const std::string& path) const;

private:
    mutable std::shared_mutex mutex_;
    mutable std::atomic<long> hits_ = 0;
    mutable std::atomic<long> misses_ = 0;
    std::unordered_map<std::string, mpz_class> values_;
};

// N_d: rational plane curves of degree d through 3d-1 general points.
// N_1 = 1 and
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} (d1^2 d2^2 C(3d-4,3d1-2) - d1^3 d2 C(3d-4,3d1-1)).
mpz_class kontsevich_nd(int d);

struct EngineStats {
    long store_hits = 0;
    long store_misses = 0;
    int max_depth = 0;
};

// Evaluates the mixed invariant: dimension gate, three-insertion base cases,
// and the composition-law recursion with the fixed-side pivot (alpha_1,
// alpha_2 | rest), memoized in an InvariantStore.
class InvariantEngine {
public:
    explicit InvariantEngine(const RingPresentation& pres);

    const RingPresentation& presentation() const { return *pres_; }
    const QuantumTable& quantum() const { return table_; }
    const DiagonalDecomposition& diagonal() const { return diagonal_; }
    InvariantStore& store() { return store_; }
    const InvariantStore& store() const { return store_; }
    EngineStats stats() const;
    void reset_stats();

    InvariantKey make_key(int degree, const std::vector<std::string>& fixed_labels,
                          const std::vector<std::string>& free_labels) const;

    // Vanishing condition: sum of insertion codimensions must equal
    // c1deg * degree + dimension + |free|.
    bool dimension_gate(const InvariantKey& key) const;

    // Degree-zero invariants: nonzero only for three fixed insertions and no
    // free ones, where constant maps contribute the classical triple
    // intersection.
    mpz_class classical_invariant(const InvariantKey& key) const;

    // <a, b, c> at the given degree: the q^degree coefficient of a x_Q b
    // paired against c.
    mpz_class three_point_invariant(int degree, const ClassVector& a, const ClassVector& b,
                                    const ClassVector& c) const;

    // Full reduction on P^2 for three fixed insertions and any number of free
    // ones: gate, degree-zero classical values, vanishing on unit insertions,
    // one degree factor per divisor insertion, then N_d.
    mpz_class reduce_p2(const InvariantKey& key) const;

    mpz_class mixed_invariant(const InvariantKey& key);

    // One evaluation of the composition law with an explicit choice of which
    // fixed positions form the first factor (2 <= |left| <= n-2); the free
    // side is distributed over shuffles S(m_1, m).
    mpz_class composition_split(const InvariantKey& key, const std::vector<int>& left_positions);

    // Same splitting, but summing over all of S(m) with 1/(k!(m-k)!) weights;
    // equals composition_split by the symmetry of the invariant.
    mpq_class composition_split_weighted(const InvariantKey& key,
                                         const std::vector<int>& left_positions);

private:
    const RingPresentation* pres_;
    QuantumTable table_;
    DiagonalDecomposition diagonal_;
    InvariantStore store_;
    std::unique_ptr<RingPresentation> line_space_;  // G(2,n+1), built on demand
    int depth_ = 0;
    int max_depth_ = 0;

    void validate(const InvariantKey& key) const;
    mpz_class base_three(const InvariantKey& key);
    mpz_class projective_line_count(const InvariantKey& key);
    mpz_class factor_value(int degree, std::vector<int> fixed, std::vector<int> free_side);
};

struct CompositionReport {
    bool pass = true;
    long keys_checked = 0;
    long splits_checked = 0;
    long keys_skipped = 0;  // keys whose evaluation left the validated regime
    std::string first_discrepancy;
};

// For every gate-passing key within the bounds, evaluates every admissible
// fixed-side splitting (n_1, n_2 >= 2) over every choice of positions and
// asserts all agree with the memoized value.
CompositionReport verify_composition_law(InvariantEngine& engine, int max_degree, int max_n,
                                         int max_m);

// All multisets of the given size over values 0..num_values-1, ascending.
std::vector<std::vector<int>> multisets(int num_values, int size);

} // namespace qh
