#include "qh/schubert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qh {

std::vector<Partition> pieri_strips(const Partition& lambda, int p, int max_rows, int cols) {
    if (!lambda.fits_box(max_rows, cols))
        throw std::invalid_argument("partition (" + lambda.to_string() + ") outside the " +
                                    std::to_string(max_rows) + "x" + std::to_string(cols) + " box");
    if (p < 0 || p > cols)
        throw std::invalid_argument("Pieri degree " + std::to_string(p) + " outside 0.." +
                                    std::to_string(cols));
    std::vector<Partition> out;
    std::vector<int> mu(static_cast<std::size_t>(max_rows), 0);
    // row r gains mu[r] - lambda_r boxes; the strip condition is mu[r] <= lambda_{r-1}
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == max_rows) {
            if (remaining == 0) out.emplace_back(Partition(std::vector<int>(mu)));
            return;
        }
        int lo = lambda.part(static_cast<std::size_t>(row));
        int hi = row == 0 ? cols : std::min(lambda.part(static_cast<std::size_t>(row - 1)), cols);
        for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
            mu[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, remaining - (v - lo));
        }
        mu[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0, p);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

ClassVector pieri(const RingPresentation& pres, const Partition& lambda, int p) {
    const auto& spec = pres.spec();
    ClassVector out(pres.space());
    for (const auto& mu : pieri_strips(lambda, p, spec.box_rows(), spec.box_cols()))
        out.add(pres.index_of(mu), 1);
    return out;
}

std::string GiambelliPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [coef, mono] : terms) {
        mpz_class a = coef;
        bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1 || mono.empty()) out += a.get_str();
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i || a != 1) out += '*';
            out += 's' + std::to_string(mono[i]);
        }
    }
    return out;
}

GiambelliPolynomial giambelli(const Partition& lambda, int cols) {
    const int r = static_cast<int>(lambda.rows());
    GiambelliPolynomial out;
    if (r == 0) {
        out.terms.emplace_back(1, std::vector<int>{});
        return out;
    }
    std::map<std::vector<int>, mpz_class> collected;
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        std::vector<int> mono;
        bool zero = false;
        for (int i = 0; i < r && !zero; ++i) {
            int p = lambda.part(static_cast<std::size_t>(i)) + perm[static_cast<std::size_t>(i)] - i;
            if (p < 0 || p > cols) zero = true;
            else if (p > 0) mono.push_back(p);
        }
        if (zero) continue;
        std::sort(mono.begin(), mono.end(), std::greater<int>());
        collected[mono] += (inversions % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& [mono, coef] : collected)
        if (coef != 0) out.terms.emplace_back(coef, mono);
    return out;
}

namespace {

std::vector<BasisElement> box_basis(const SpaceSpec& spec, bool projective_labels) {
    std::vector<BasisElement> basis;
    const int dim = spec.box_rows() * spec.box_cols();
    for (const auto& shape : partitions_in_box(spec.box_rows(), spec.box_cols())) {
        BasisElement b;
        b.codim = shape.weight();
        b.shape = shape;
        if (b.codim == 0)
            b.label = "1";
        else if (projective_labels)
            b.label = b.codim == dim ? "pt" : (b.codim == 1 ? "h" : "h" + std::to_string(b.codim));
        else
            b.label = "s" + shape.to_string();
        basis.push_back(std::move(b));
    }
    return basis;
}

// Multiply the classical expansion `acc` by the special class sigma_p.
std::map<std::vector<int>, mpz_class> multiply_special(
    const std::map<std::vector<int>, mpz_class>& acc, int p, const SpaceSpec& spec) {
    std::map<std::vector<int>, mpz_class> out;
    for (const auto& [shape, coef] : acc)
        for (const auto& mu : pieri_strips(Partition(std::vector<int>(shape)), p,
                                           spec.box_rows(), spec.box_cols()))
            out[mu.parts] += coef;
    return out;
}

std::vector<ClassVector> build_structure(const std::string& space_id, const SpaceSpec& spec,
                                         const std::vector<BasisElement>& basis) {
    const std::size_t rank = basis.size();
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < rank; ++i) index[basis[i].shape.parts] = static_cast<int>(i);

    std::vector<ClassVector> table(rank * rank, ClassVector(space_id));
    for (std::size_t j = 0; j < rank; ++j) {
        GiambelliPolynomial gp = giambelli(basis[j].shape, spec.box_cols());
        for (std::size_t i = 0; i < rank; ++i) {
            std::map<std::vector<int>, mpz_class> total;
            for (const auto& [coef, mono] : gp.terms) {
                std::map<std::vector<int>, mpz_class> acc{{basis[i].shape.parts, coef}};
                for (int p : mono) acc = multiply_special(acc, p, spec);
                for (const auto& [shape, c] : acc) total[shape] += c;
            }
            ClassVector& cell = table[i * rank + j];
            for (const auto& [shape, c] : total)
                if (c != 0) cell.add(index.at(shape), mpq_class(c));
        }
    }
    return table;
}

} // namespace

RingPresentation projective_space(int n) {
    if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
    SpaceSpec spec{SpaceSpec::Kind::Projective, 1, n};
    std::string id = "P" + std::to_string(n);
    auto basis = box_basis(spec, true);
    return RingPresentation(id, spec, n, n + 1, basis, build_structure(id, spec, basis));
}

RingPresentation grassmannian(int k, int n) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("Grassmannian needs 1 <= k < n");
    SpaceSpec spec{SpaceSpec::Kind::Grassmannian, k, n};
    std::string id = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
    auto basis = box_basis(spec, false);
    return RingPresentation(id, spec, k * (n - k), n, basis, build_structure(id, spec, basis));
}

RingPresentation parse_space(const std::string& text) {
    if (text.size() >= 2 && text[0] == 'P') {
        std::size_t pos = 0;
        int n = std::stoi(text.substr(1), &pos);
        if (pos + 1 != text.size()) throw std::invalid_argument("bad space spec '" + text + "'");
        return projective_space(n);
    }
    if (text.size() >= 6 && text.rfind("G(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(2, text.size() - 3);
        auto comma = inner.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad space spec '" + text + "'");
        int k = std::stoi(inner.substr(0, comma));
        int n = std::stoi(inner.substr(comma + 1));
        return grassmannian(k, n);
    }
    throw std::invalid_argument("bad space spec '" + text + "' (expected P<n> or G(k,n))");
}

mpq_class intersection_number(const RingPresentation& pres,
                              const std::vector<ClassVector>& classes) {
    if (classes.empty())
        throw std::invalid_argument("intersection_number needs at least one class");
    ClassVector acc = pres.basis_class(pres.unit_index());
    for (const auto& c : classes) acc = pres.cup(acc, c);
    return acc.coeff(pres.point_index());
}

} // namespace qh
