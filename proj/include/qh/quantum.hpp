#pragma once

#include <map>
#include <string>
#include <vector>

#include "qh/ring.hpp"
#include "qh/schubert.hpp"

namespace qh {

// Polynomial in the formal degree variable q with class-vector coefficients.
// q carries codimension c1deg, so a product of two pure classes of codims
// a and b has its q^e part in codimension a + b - e*c1deg.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::string space_id) : space_(std::move(space_id)) {}

    const std::string& space() const { return space_; }
    const std::map<int, ClassVector>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int max_exponent() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    ClassVector coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? ClassVector(space_) : it->second;
    }

    void add_term(int exponent, const ClassVector& value);

    QSeries& operator+=(const QSeries& other);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    QSeries& operator*=(const mpq_class& scalar);

    QSeries truncated(int max_exp) const;

    bool operator==(const QSeries& other) const {
        return space_ == other.space_ && terms_ == other.terms_;
    }
    bool operator!=(const QSeries& other) const { return !(*this == other); }

private:
    std::string space_;
    std::map<int, ClassVector> terms_;  // exponent -> nonzero coefficient vector
};

// Quantum Pieri: classical horizontal strips plus the single q-correction
// summing sigma_nu over |nu| = |lambda| + p - n with
// lambda_1 - 1 >= nu_1 >= lambda_2 - 1 >= ... >= lambda_k - 1 >= nu_k >= 0.
// Grassmannian presentations only; requires 1 <= p <= n-k.
QSeries quantum_pieri(const RingPresentation& pres, const Partition& lambda, int p);

// Small quantum product tables. Grassmannian entries evaluate the Giambelli
// determinant of one factor inside the quantum ring via quantum Pieri;
// projective spaces use h^a x h^b = h^{a+b} or q h^{a+b-n-1}.
// Built once per space and immutable afterwards.
class QuantumTable {
public:
    explicit QuantumTable(const RingPresentation& pres);

    const RingPresentation& presentation() const { return *pres_; }
    const QSeries& basis_product(int i, int j) const;

    QSeries product(const ClassVector& a, const ClassVector& b) const;
    QSeries product(const QSeries& a, const ClassVector& b) const;

private:
    const RingPresentation* pres_;
    std::vector<QSeries> table_;
};

struct RelationReport {
    std::string space;
    std::vector<std::string> lines;
    bool verified = false;
};

// Verified q-deformed identities read off the product table: the iterated
// h-power relation for P^n, the top special row and every q-bearing pair
// for a Grassmannian.
RelationReport ring_relation(const QuantumTable& table);

struct AssociativityReport {
    bool pass = false;
    long triples_checked = 0;
    int q_cutoff = 0;
    std::string first_counterexample;
};

// Exhaustive (a x b) x c = a x (b x c) over basis triples, comparing all
// q-exponents <= q_cutoff.
AssociativityReport verify_associativity(const QuantumTable& table, int q_cutoff);

// Largest exponent reachable by a product of two classes: ceil(2*dim/c1deg).
int default_q_cutoff(const RingPresentation& pres);
// Largest exponent reachable in a triple product: floor(3*dim/c1deg).
int full_q_cutoff(const RingPresentation& pres);

std::string format_qseries(const RingPresentation& pres, const QSeries& s);

} // namespace qh
