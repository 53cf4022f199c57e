#include "qh/quantum.hpp"

#include <stdexcept>

namespace qh {

void QSeries::add_term(int exponent, const ClassVector& value) {
    if (value.is_zero()) return;
    if (space_.empty()) space_ = value.space();
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
}

QSeries& QSeries::operator+=(const QSeries& other) {
    for (const auto& [e, v] : other.terms_) add_term(e, v);
    return *this;
}

QSeries& QSeries::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= scalar;
    return *this;
}

QSeries QSeries::truncated(int max_exp) const {
    QSeries out(space_);
    for (const auto& [e, v] : terms_)
        if (e <= max_exp) out.add_term(e, v);
    return out;
}

namespace {

// nu-chain of the quantum Pieri correction; nu_1 <= lambda_1 - 1 keeps every
// candidate inside the box automatically
std::vector<Partition> quantum_strips(const Partition& lambda, int p, int k, int n) {
    std::vector<Partition> out;
    const int target = lambda.weight() + p - n;
    if (target < 0) return out;
    std::vector<int> nu(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == k) {
            if (remaining == 0) out.emplace_back(Partition(std::vector<int>(nu)));
            return;
        }
        const int hi = lambda.part(static_cast<std::size_t>(row)) - 1;
        const int lo =
            row + 1 < k ? std::max(lambda.part(static_cast<std::size_t>(row + 1)) - 1, 0) : 0;
        for (int v = lo; v <= hi && v <= remaining; ++v) {
            nu[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, remaining - v);
        }
        nu[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0, target);
    return out;
}

} // namespace

QSeries quantum_pieri(const RingPresentation& pres, const Partition& lambda, int p) {
    const auto& spec = pres.spec();
    if (spec.kind != SpaceSpec::Kind::Grassmannian)
        throw std::invalid_argument("quantum_pieri applies to Grassmannian presentations");
    if (p < 1 || p > spec.box_cols())
        throw std::invalid_argument("quantum Pieri degree outside 1..n-k");
    QSeries out(pres.space());
    out.add_term(0, pieri(pres, lambda, p));
    ClassVector correction(pres.space());
    for (const auto& nu : quantum_strips(lambda, p, spec.box_rows(), spec.n))
        correction.add(pres.index_of(nu), 1);
    out.add_term(1, correction);
    return out;
}

QuantumTable::QuantumTable(const RingPresentation& pres) : pres_(&pres) {
    const std::size_t rank = pres.rank();
    table_.assign(rank * rank, QSeries(pres.space()));
    const auto& spec = pres.spec();
    if (spec.kind == SpaceSpec::Kind::Projective) {
        const int n = spec.n;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) {
                int total = pres.basis_element(static_cast<int>(i)).codim +
                            pres.basis_element(static_cast<int>(j)).codim;
                QSeries& cell = table_[i * rank + j];
                if (total <= n)
                    cell.add_term(0, pres.basis_class(pres.index_of(Partition{total})));
                else
                    cell.add_term(1, pres.basis_class(pres.index_of(Partition{total - n - 1})));
            }
        return;
    }
    // quantum Giambelli: evaluate the determinant of the second factor in the
    // quantum ring, multiplying by special classes through quantum Pieri
    auto multiply_special_q = [&](const QSeries& s, int p) {
        QSeries out(pres.space());
        for (const auto& [e, vec] : s.terms())
            for (const auto& [idx, c] : vec.coeffs()) {
                QSeries step = quantum_pieri(pres, pres.basis_element(idx).shape, p);
                step *= c;
                for (const auto& [e2, v2] : step.terms()) out.add_term(e + e2, v2);
            }
        return out;
    };
    for (std::size_t j = 0; j < rank; ++j) {
        GiambelliPolynomial gp = giambelli(pres.basis_element(static_cast<int>(j)).shape,
                                           spec.box_cols());
        for (std::size_t i = 0; i < rank; ++i) {
            QSeries acc(pres.space());
            for (const auto& [coef, mono] : gp.terms) {
                QSeries cur(pres.space());
                cur.add_term(0, pres.basis_class(static_cast<int>(i)));
                for (int p : mono) cur = multiply_special_q(cur, p);
                cur *= mpq_class(coef);
                acc += cur;
            }
            table_[i * rank + j] = acc;
        }
    }
}

const QSeries& QuantumTable::basis_product(int i, int j) const {
    return table_.at(static_cast<std::size_t>(i) * pres_->rank() + static_cast<std::size_t>(j));
}

QSeries QuantumTable::product(const ClassVector& a, const ClassVector& b) const {
    if ((!a.space().empty() && a.space() != pres_->space()) ||
        (!b.space().empty() && b.space() != pres_->space()))
        throw std::invalid_argument("quantum product: class from another space on " +
                                    pres_->space());
    QSeries out(pres_->space());
    for (const auto& [i, ca] : a.coeffs())
        for (const auto& [j, cb] : b.coeffs()) {
            QSeries cell = basis_product(i, j);
            cell *= ca * cb;
            out += cell;
        }
    return out;
}

QSeries QuantumTable::product(const QSeries& a, const ClassVector& b) const {
    QSeries out(pres_->space());
    for (const auto& [e, vec] : a.terms()) {
        QSeries part = product(vec, b);
        for (const auto& [e2, v2] : part.terms()) out.add_term(e + e2, v2);
    }
    return out;
}

int default_q_cutoff(const RingPresentation& pres) {
    return (2 * pres.dimension() + pres.c1deg() - 1) / pres.c1deg();
}

int full_q_cutoff(const RingPresentation& pres) {
    return (3 * pres.dimension()) / pres.c1deg();
}

std::string format_qseries(const RingPresentation& pres, const QSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [e, vec] : s.terms()) {
        for (const auto& [idx, c] : vec.coeffs()) {
            mpq_class a = c;
            bool neg = a < 0;
            if (neg) a = -a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string piece;
            if (a != 1) piece += a.get_str() + " ";
            if (e == 1)
                piece += "q";
            else if (e > 1)
                piece += "q^" + std::to_string(e);
            if (idx != pres.unit_index()) {
                if (e > 0) piece += ' ';
                piece += pres.basis_element(idx).label;
            } else if (e == 0) {
                piece += "1";
            }
            out += piece;
        }
    }
    return out;
}

RelationReport ring_relation(const QuantumTable& table) {
    const RingPresentation& pres = table.presentation();
    RelationReport report;
    report.space = pres.space();
    report.verified = true;
    const auto& spec = pres.spec();
    if (spec.kind == SpaceSpec::Kind::Projective) {
        const int n = spec.n;
        ClassVector h = pres.basis_class(pres.index_of(Partition{1}));
        QSeries acc(pres.space());
        acc.add_term(0, h);
        for (int i = 0; i < n; ++i) acc = table.product(acc, h);
        QSeries expected(pres.space());
        expected.add_term(1, pres.basis_class(pres.unit_index()));
        report.verified = acc == expected;
        std::string lhs = "h";
        for (int i = 0; i < n; ++i) lhs += "*h";
        report.lines.push_back(lhs + " = " + format_qseries(pres, acc));
        return report;
    }
    const int rank = static_cast<int>(pres.rank());
    const int top = pres.index_of(Partition{spec.box_cols()});
    auto emit = [&](int i, int j) {
        const QSeries& s = table.basis_product(i, j);
        report.lines.push_back(pres.basis_element(i).label + "*" + pres.basis_element(j).label +
                               " = " + format_qseries(pres, s));
        if (s != table.product(pres.basis_class(i), pres.basis_class(j)))
            report.verified = false;
    };
    for (int j = 0; j < rank; ++j) emit(top, j);
    for (int i = 0; i < rank; ++i)
        for (int j = i; j < rank; ++j) {
            if (i == top || j == top) continue;
            if (table.basis_product(i, j).max_exponent() >= 1) emit(i, j);
        }
    return report;
}

AssociativityReport verify_associativity(const QuantumTable& table, int q_cutoff) {
    if (q_cutoff < 1) throw std::invalid_argument("q_cutoff must be >= 1");
    const RingPresentation& pres = table.presentation();
    AssociativityReport report;
    report.q_cutoff = q_cutoff;
    report.pass = true;
    const int rank = static_cast<int>(pres.rank());
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            for (int c = 0; c < rank; ++c) {
                QSeries left = table.product(table.basis_product(a, b), pres.basis_class(c));
                QSeries ab_c = left.truncated(q_cutoff);
                QSeries bc = table.basis_product(b, c);
                QSeries right(pres.space());
                for (const auto& [e, vec] : bc.terms()) {
                    QSeries part = table.product(pres.basis_class(a), vec);
                    for (const auto& [e2, v2] : part.terms()) right.add_term(e + e2, v2);
                }
                ++report.triples_checked;
                if (ab_c != right.truncated(q_cutoff)) {
                    if (report.pass) {
                        report.first_counterexample =
                            "(" + pres.basis_element(a).label + ", " + pres.basis_element(b).label +
                            ", " + pres.basis_element(c).label + ")";
                    }
                    report.pass = false;
                }
            }
    return report;
}

} // namespace qh
