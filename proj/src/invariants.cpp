#include "qh/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>

#include "json.hpp"
#include "qh/schubert.hpp"

namespace qh {

namespace {

mpz_class to_integer(const mpq_class& q, const char* who) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(std::string(who) + ": expected an integer, got " + c.get_str());
    return c.get_num();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class int_pow(long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

struct DepthGuard {
    int* depth;
    int* max_depth;
    DepthGuard(int* d, int* m) : depth(d), max_depth(m) {
        if (++*depth > *max_depth) *max_depth = *depth;
    }
    ~DepthGuard() { --*depth; }
};

} // namespace

InvariantKey::InvariantKey(std::string space_id, int d, std::vector<int> fixed_classes,
                           std::vector<int> free_classes)
    : space(std::move(space_id)),
      degree(d),
      fixed(std::move(fixed_classes)),
      free_side(std::move(free_classes)) {
    if (degree < 0) throw std::invalid_argument("invariant key needs degree >= 0");
    canonicalize();
}

void InvariantKey::canonicalize() {
    std::sort(fixed.begin(), fixed.end());
    std::sort(free_side.begin(), free_side.end());
}

std::string InvariantKey::to_string(const RingPresentation& pres) const {
    std::string out = space + "|" + std::to_string(degree) + "|fixed:";
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (i) out += ',';
        out += pres.basis_element(fixed[i]).label;
    }
    out += "|free:";
    for (std::size_t i = 0; i < free_side.size(); ++i) {
        if (i) out += ',';
        out += pres.basis_element(free_side[i]).label;
    }
    return out;
}

std::optional<mpz_class> InvariantStore::lookup(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void InvariantStore::insert(const std::string& key, const mpz_class& value) {
    std::unique_lock lock(mutex_);
    values_[key] = value;
}

std::size_t InvariantStore::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

void InvariantStore::clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
    hits_ = misses_ = 0;
}

std::vector<std::pair<std::string, mpz_class>> InvariantStore::snapshot() const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<std::string, mpz_class>> out(values_.begin(), values_.end());
    std::sort(out.begin(), out.end());
    return out;
}

void InvariantStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    in >> j;
    std::unique_lock lock(mutex_);
    for (auto it = j.begin(); it != j.end(); ++it)
        values_[it.key()] = mpz_class(it.value().get<std::string>());
}

void InvariantStore::save_file(const std::string& path) const {
    nlohmann::json j = nlohmann::json::object();
    {
        std::shared_lock lock(mutex_);
        for (const auto& [k, v] : values_) j[k] = v.get_str();
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << j.dump(1) << "\n";
}

mpz_class kontsevich_nd(int d) {
    if (d < 1) throw std::invalid_argument("N_d needs d >= 1");
    static std::mutex mu;
    static std::vector<mpz_class> memo{0, 1};  // memo[0] unused
    std::lock_guard lock(mu);
    while (static_cast<int>(memo.size()) <= d) {
        const int dd = static_cast<int>(memo.size());
        mpz_class total = 0;
        for (int d1 = 1; d1 < dd; ++d1) {
            const int d2 = dd - d1;
            mpz_class a = mpz_class(d1) * d1 * d2 * d2 *
                          binomial(static_cast<unsigned long>(3 * dd - 4),
                                   static_cast<unsigned long>(3 * d1 - 2));
            mpz_class b = mpz_class(d1) * d1 * d1 * d2 *
                          binomial(static_cast<unsigned long>(3 * dd - 4),
                                   static_cast<unsigned long>(3 * d1 - 1));
            total += memo[static_cast<std::size_t>(d1)] * memo[static_cast<std::size_t>(d2)] *
                     (a - b);
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(d)];
}

InvariantEngine::InvariantEngine(const RingPresentation& pres)
    : pres_(&pres), table_(pres), diagonal_(diagonal_decomposition(pres)) {}

EngineStats InvariantEngine::stats() const {
    return EngineStats{store_.hits(), store_.misses(), max_depth_};
}

void InvariantEngine::reset_stats() { max_depth_ = 0; }

InvariantKey InvariantEngine::make_key(int degree, const std::vector<std::string>& fixed_labels,
                                       const std::vector<std::string>& free_labels) const {
    std::vector<int> fixed, free_side;
    for (const auto& l : fixed_labels) fixed.push_back(pres_->index_of_label(l));
    for (const auto& l : free_labels) free_side.push_back(pres_->index_of_label(l));
    return InvariantKey(pres_->space(), degree, std::move(fixed), std::move(free_side));
}

void InvariantEngine::validate(const InvariantKey& key) const {
    if (key.space != pres_->space())
        throw std::invalid_argument("key on " + key.space + " evaluated on " + pres_->space());
    if (key.degree < 0) throw std::invalid_argument("negative curve degree");
    auto check = [&](const std::vector<int>& v) {
        for (int idx : v)
            if (idx < 0 || idx >= static_cast<int>(pres_->rank()))
                throw std::invalid_argument("basis index out of range");
    };
    check(key.fixed);
    check(key.free_side);
}

bool InvariantEngine::dimension_gate(const InvariantKey& key) const {
    validate(key);
    long total = 0;
    for (int idx : key.fixed) total += pres_->basis_element(idx).codim;
    for (int idx : key.free_side) total += pres_->basis_element(idx).codim;
    const long target = static_cast<long>(pres_->c1deg()) * key.degree + pres_->dimension() +
                        static_cast<long>(key.free_count());
    return total == target;
}

mpz_class InvariantEngine::classical_invariant(const InvariantKey& key) const {
    validate(key);
    if (key.degree != 0)
        throw std::invalid_argument("classical_invariant needs degree 0");
    if (key.fixed_count() != 3 || key.free_count() != 0 || !dimension_gate(key)) return 0;
    std::vector<ClassVector> classes;
    for (int idx : key.fixed) classes.push_back(pres_->basis_class(idx));
    return to_integer(intersection_number(*pres_, classes), "classical_invariant");
}

mpz_class InvariantEngine::three_point_invariant(int degree, const ClassVector& a,
                                                 const ClassVector& b,
                                                 const ClassVector& c) const {
    if (degree < 0) throw std::invalid_argument("three_point_invariant needs degree >= 0");
    QSeries prod = table_.product(a, b);
    return to_integer(pres_->pairing(prod.coefficient(degree), c), "three_point_invariant");
}

mpz_class InvariantEngine::reduce_p2(const InvariantKey& key) const {
    validate(key);
    if (pres_->spec().kind != SpaceSpec::Kind::Projective || pres_->spec().n != 2)
        throw std::invalid_argument("reduce_p2 applies to P2 only");
    if (key.fixed_count() != 3)
        throw std::invalid_argument("reduce_p2 needs exactly three fixed insertions");
    if (!dimension_gate(key)) return 0;
    if (key.degree == 0) {
        if (key.free_count() != 0) return 0;
        return classical_invariant(key);
    }
    // the 3 fixed and m free insertions merge into one symmetric multiset
    unsigned long units = 0, divisors = 0;
    auto count = [&](const std::vector<int>& v) {
        for (int idx : v) {
            const int c = pres_->basis_element(idx).codim;
            if (c == 0) ++units;
            if (c == 1) ++divisors;
        }
    };
    count(key.fixed);
    count(key.free_side);
    if (units > 0) return 0;
    // the gate forces exactly 3d-1 point insertions here
    return int_pow(key.degree, divisors) * kontsevich_nd(key.degree);
}

mpz_class InvariantEngine::projective_line_count(const InvariantKey& key) {
    // Degree-one counts with three pinned insertions are incidence numbers:
    // a codim-c insertion asks the line to meet a codim-c linear subspace,
    // the Schubert condition sigma_{c-1} on lines in P^n.
    if (!line_space_)
        line_space_ = std::make_unique<RingPresentation>(grassmannian(2, pres_->spec().n + 1));
    std::vector<ClassVector> conditions{line_space_->basis_class(line_space_->unit_index())};
    auto push = [&](int idx) {
        const int c = pres_->basis_element(idx).codim;
        if (c >= 2)
            conditions.push_back(line_space_->basis_class(line_space_->index_of(Partition{c - 1})));
    };
    for (int idx : key.fixed) push(idx);
    for (int idx : key.free_side) push(idx);
    return to_integer(intersection_number(*line_space_, conditions), "line count");
}

mpz_class InvariantEngine::base_three(const InvariantKey& key) {
    const auto& spec = pres_->spec();
    if (spec.kind == SpaceSpec::Kind::Projective && spec.n == 2) return reduce_p2(key);

    const int d = key.degree;
    if (key.free_count() == 0) {
        if (d == 0) return classical_invariant(key);
        return three_point_invariant(d, pres_->basis_class(key.fixed[0]),
                                     pres_->basis_class(key.fixed[1]),
                                     pres_->basis_class(key.fixed[2]));
    }
    if (d == 0) return 0;  // gate-passing constant-map keys with free points are empty
    auto has_unit = [&](const std::vector<int>& v) {
        return std::any_of(v.begin(), v.end(),
                           [&](int idx) { return pres_->basis_element(idx).codim == 0; });
    };
    if (has_unit(key.fixed) || has_unit(key.free_side)) return 0;

    const bool all_divisors =
        std::all_of(key.free_side.begin(), key.free_side.end(),
                    [&](int idx) { return pres_->basis_element(idx).codim == 1; });

    if (spec.kind == SpaceSpec::Kind::Projective) {
        if (all_divisors) {
            InvariantKey stripped(key.space, d, key.fixed, {});
            return int_pow(d, key.free_count()) * base_three(stripped);
        }
        if (d == 1) return projective_line_count(key);
        throw unsupported_key_error("free insertions of codim >= 2 at degree >= 2 on " +
                                    pres_->space() + " are outside the validated regime");
    }
    // Grassmannian: only the degree <= 1 seeds with divisor-class free
    // insertions are validated
    if (d == 1 && all_divisors) {
        InvariantKey stripped(key.space, d, key.fixed, {});
        return base_three(stripped);  // each divisor insertion contributes a factor d = 1
    }
    throw unsupported_key_error("free insertions on " + pres_->space() +
                                " are validated only at degree <= 1 for divisor classes");
}

mpz_class InvariantEngine::mixed_invariant(const InvariantKey& key_in) {
    InvariantKey key = key_in;
    key.canonicalize();
    validate(key);
    if (key.fixed_count() < 3)
        throw unsupported_key_error("mixed invariant needs at least three fixed insertions (got " +
                                    std::to_string(key.fixed_count()) + ")");
    DepthGuard guard(&depth_, &max_depth_);
    if (!dimension_gate(key)) return 0;
    const std::string memo_key = key.to_string(*pres_);
    if (auto hit = store_.lookup(memo_key)) return *hit;
    mpz_class value;
    if (key.fixed_count() == 3)
        value = base_three(key);
    else
        value = composition_split(key, {0, 1});
    store_.insert(memo_key, value);
    return value;
}

mpz_class InvariantEngine::composition_split(const InvariantKey& key_in,
                                             const std::vector<int>& left_positions) {
    InvariantKey key = key_in;
    key.canonicalize();
    validate(key);
    const std::size_t n = key.fixed_count();
    const std::size_t m = key.free_count();
    if (n < 4) throw std::invalid_argument("composition split needs at least four fixed insertions");
    if (left_positions.size() < 2 || left_positions.size() > n - 2)
        throw std::invalid_argument("fixed-side splitting needs n_1, n_2 >= 2");
    if (m > 16) throw unsupported_key_error("free side too large to distribute");

    std::vector<char> is_left(n, 0);
    for (int pos : left_positions) {
        if (pos < 0 || pos >= static_cast<int>(n) || is_left[static_cast<std::size_t>(pos)])
            throw std::invalid_argument("bad splitting positions");
        is_left[static_cast<std::size_t>(pos)] = 1;
    }
    std::vector<int> left_fixed, right_fixed;
    for (std::size_t i = 0; i < n; ++i)
        (is_left[i] ? left_fixed : right_fixed).push_back(key.fixed[i]);

    mpq_class total = 0;
    for (int d1 = 0; d1 <= key.degree; ++d1) {
        const int d2 = key.degree - d1;
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            std::vector<int> left_free, right_free;
            for (std::size_t j = 0; j < m; ++j)
                (((mask >> j) & 1ul) ? left_free : right_free).push_back(key.free_side[j]);
            for (const auto& [zeta, dual] : diagonal_.pairs) {
                const int zeta_idx = zeta.coeffs().begin()->first;
                std::vector<int> lf = left_fixed;
                lf.push_back(zeta_idx);
                InvariantKey left_key(key.space, d1, std::move(lf), left_free);
                if (!dimension_gate(left_key)) continue;
                const mpz_class lv = mixed_invariant(left_key);
                if (lv == 0) continue;
                for (const auto& [dual_idx, dual_coef] : dual.coeffs()) {
                    std::vector<int> rf = right_fixed;
                    rf.push_back(dual_idx);
                    InvariantKey right_key(key.space, d2, std::move(rf), right_free);
                    if (!dimension_gate(right_key)) continue;
                    total += dual_coef * mpq_class(lv * mixed_invariant(right_key));
                }
            }
        }
    }
    return to_integer(total, "composition sum");
}

mpq_class InvariantEngine::composition_split_weighted(const InvariantKey& key_in,
                                                      const std::vector<int>& left_positions) {
    InvariantKey key = key_in;
    key.canonicalize();
    validate(key);
    const std::size_t n = key.fixed_count();
    const std::size_t m = key.free_count();
    if (n < 4) throw std::invalid_argument("composition split needs at least four fixed insertions");
    if (m > 8) throw unsupported_key_error("free side too large for the full permutation sum");
    std::vector<char> is_left(n, 0);
    for (int pos : left_positions) is_left[static_cast<std::size_t>(pos)] = 1;
    std::vector<int> left_fixed, right_fixed;
    for (std::size_t i = 0; i < n; ++i)
        (is_left[i] ? left_fixed : right_fixed).push_back(key.fixed[i]);

    std::vector<mpz_class> factorial(m + 1, 1);
    for (std::size_t i = 1; i <= m; ++i)
        factorial[i] = factorial[i - 1] * static_cast<long>(i);

    mpq_class total = 0;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::size_t k = 0; k <= m; ++k) {
            std::vector<int> left_free, right_free;
            for (std::size_t j = 0; j < k; ++j)
                left_free.push_back(key.free_side[static_cast<std::size_t>(perm[j])]);
            for (std::size_t j = k; j < m; ++j)
                right_free.push_back(key.free_side[static_cast<std::size_t>(perm[j])]);
            mpq_class weight(1);
            weight /= mpq_class(factorial[k] * factorial[m - k]);
            for (int d1 = 0; d1 <= key.degree; ++d1) {
                const int d2 = key.degree - d1;
                for (const auto& [zeta, dual] : diagonal_.pairs) {
                    const int zeta_idx = zeta.coeffs().begin()->first;
                    std::vector<int> lf = left_fixed;
                    lf.push_back(zeta_idx);
                    InvariantKey left_key(key.space, d1, std::move(lf), left_free);
                    if (!dimension_gate(left_key)) continue;
                    const mpz_class lv = mixed_invariant(left_key);
                    if (lv == 0) continue;
                    for (const auto& [dual_idx, dual_coef] : dual.coeffs()) {
                        std::vector<int> rf = right_fixed;
                        rf.push_back(dual_idx);
                        InvariantKey right_key(key.space, d2, std::move(rf), right_free);
                        if (!dimension_gate(right_key)) continue;
                        total += weight * dual_coef * mpq_class(lv * mixed_invariant(right_key));
                    }
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<int>> multisets(int num_values, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < num_values; ++v) {
            cur.push_back(v);
            self(self, v, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

CompositionReport verify_composition_law(InvariantEngine& engine, int max_degree, int max_n,
                                         int max_m) {
    if (max_degree < 0 || max_n < 4)
        throw std::invalid_argument("composition verification needs max_degree >= 0, max_n >= 4");
    const RingPresentation& pres = engine.presentation();
    const int rank = static_cast<int>(pres.rank());
    CompositionReport report;
    for (int n = 4; n <= max_n; ++n) {
        const auto fixed_sets = multisets(rank, n);
        for (int m = 0; m <= max_m; ++m) {
            const auto free_sets = multisets(rank, m);
            for (const auto& fixed : fixed_sets)
                for (const auto& free_side : free_sets)
                    for (int d = 0; d <= max_degree; ++d) {
                        InvariantKey key(pres.space(), d, fixed, free_side);
                        if (!engine.dimension_gate(key)) continue;
                        try {
                            ++report.keys_checked;
                            const mpz_class reference = engine.mixed_invariant(key);
                            for (int n1 = 2; n1 + 2 <= n; ++n1) {
                                std::vector<int> idx(static_cast<std::size_t>(n1));
                                std::iota(idx.begin(), idx.end(), 0);
                                while (true) {
                                    const mpz_class value = engine.composition_split(key, idx);
                                    ++report.splits_checked;
                                    if (value != reference && report.pass) {
                                        report.pass = false;
                                        report.first_discrepancy =
                                            key.to_string(pres) + ": split value " +
                                            value.get_str() + " != " + reference.get_str();
                                    }
                                    int i = n1 - 1;
                                    while (i >= 0 &&
                                           idx[static_cast<std::size_t>(i)] == n - n1 + i)
                                        --i;
                                    if (i < 0) break;
                                    ++idx[static_cast<std::size_t>(i)];
                                    for (int j = i + 1; j < n1; ++j)
                                        idx[static_cast<std::size_t>(j)] =
                                            idx[static_cast<std::size_t>(j - 1)] + 1;
                                }
                            }
                        } catch (const unsupported_key_error&) {
                            --report.keys_checked;
                            ++report.keys_skipped;
                        }
                    }
        }
    }
    return report;
}

} // namespace qh
