#include "qh/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

ClassVector& ClassVector::operator+=(const ClassVector& other) {
    if (space_.empty()) space_ = other.space_;
    if (other.space_ != space_)
        throw std::invalid_argument("class vectors live on different spaces: " + space_ +
                                    " vs " + other.space_);
    for (const auto& [idx, c] : other.coeffs_) add(idx, c);
    return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& other) {
    if (space_.empty()) space_ = other.space_;
    if (other.space_ != space_)
        throw std::invalid_argument("class vectors live on different spaces: " + space_ +
                                    " vs " + other.space_);
    for (const auto& [idx, c] : other.coeffs_) add(idx, -c);
    return *this;
}

ClassVector& ClassVector::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [idx, c] : coeffs_) c *= scalar;
    return *this;
}

RingPresentation::RingPresentation(std::string space_id, SpaceSpec spec, int dimension,
                                   int c1deg, std::vector<BasisElement> basis,
                                   std::vector<ClassVector> structure)
    : space_(std::move(space_id)),
      spec_(spec),
      dimension_(dimension),
      c1deg_(c1deg),
      basis_(std::move(basis)),
      structure_(std::move(structure)) {
    if (structure_.size() != basis_.size() * basis_.size())
        throw std::invalid_argument("structure table size mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        label_index_[b.label] = static_cast<int>(i);
        shape_index_[b.shape.parts] = static_cast<int>(i);
        if (b.codim == 0) {
            if (unit_index_ >= 0)
                throw std::invalid_argument("presentation has two codim-0 classes");
            unit_index_ = static_cast<int>(i);
        }
        if (b.codim == dimension_) {
            if (point_index_ >= 0)
                throw std::invalid_argument("presentation has two top-codim classes");
            point_index_ = static_cast<int>(i);
        }
    }
    if (unit_index_ < 0 || point_index_ < 0)
        throw std::invalid_argument("presentation must contain a unit and a point class");
}

int RingPresentation::index_of(const Partition& shape) const {
    auto it = shape_index_.find(shape.parts);
    if (it == shape_index_.end())
        throw std::invalid_argument("no basis class with shape (" + shape.to_string() +
                                    ") on " + space_);
    return it->second;
}

int RingPresentation::index_of_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it != label_index_.end()) return it->second;
    if (label == "1") return unit_index_;
    if (label == "pt") return point_index_;
    if (label == "h") {
        auto st = shape_index_.find(std::vector<int>{1});
        if (st != shape_index_.end()) return st->second;
    }
    if (label.size() > 1 && label[0] == 'h' &&
        spec_.kind == SpaceSpec::Kind::Projective) {
        int p = std::stoi(label.substr(1));
        auto st = shape_index_.find(std::vector<int>{p});
        if (st != shape_index_.end()) return st->second;
    }
    if (label.size() > 1 && label[0] == 's') {
        std::vector<int> parts;
        std::stringstream ss(label.substr(1));
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        auto st = shape_index_.find(parts);
        if (st != shape_index_.end()) return st->second;
    }
    throw std::invalid_argument("unknown class label '" + label + "' on " + space_);
}

ClassVector RingPresentation::basis_class(int index) const {
    ClassVector v(space_);
    v.set(index, 1);
    return v;
}

const ClassVector& RingPresentation::structure(int i, int j) const {
    return structure_.at(static_cast<std::size_t>(i) * rank() + static_cast<std::size_t>(j));
}

void RingPresentation::check_space(const ClassVector& v, const char* who) const {
    if (!v.space().empty() && v.space() != space_)
        throw std::invalid_argument(std::string(who) + ": class on " + v.space() +
                                    " used with presentation " + space_);
}

ClassVector RingPresentation::cup(const ClassVector& a, const ClassVector& b) const {
    check_space(a, "cup");
    check_space(b, "cup");
    ClassVector out(space_);
    for (const auto& [i, ca] : a.coeffs())
        for (const auto& [j, cb] : b.coeffs()) {
            const ClassVector& prod = structure(i, j);
            mpq_class c = ca * cb;
            for (const auto& [k, ck] : prod.coeffs()) out.add(k, c * ck);
        }
    return out;
}

mpq_class RingPresentation::pairing(const ClassVector& a, const ClassVector& b) const {
    return cup(a, b).coeff(point_index_);
}

DiagonalDecomposition diagonal_decomposition(const RingPresentation& pres) {
    const std::size_t r = pres.rank();
    // pairing matrix augmented with the identity, reduced by exact Gauss-Jordan
    std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(2 * r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = pres.pairing(pres.basis_class(static_cast<int>(i)),
                                   pres.basis_class(static_cast<int>(j)));
        m[i][r + i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot = col;
        while (pivot < r && m[pivot][col] == 0) ++pivot;
        if (pivot == r)
            throw std::invalid_argument("degenerate pairing on " + pres.space() +
                                        ": presentation is malformed");
        std::swap(m[pivot], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            mpq_class f = m[row][col];
            for (std::size_t j = col; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
        }
    }
    DiagonalDecomposition out;
    for (std::size_t l = 0; l < r; ++l) {
        ClassVector dual(pres.space());
        for (std::size_t j = 0; j < r; ++j) dual.set(static_cast<int>(j), m[l][r + j]);
        out.pairs.emplace_back(pres.basis_class(static_cast<int>(l)), std::move(dual));
    }
    return out;
}

std::string format_class(const RingPresentation& pres, const ClassVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : v.coeffs()) {
        mpq_class a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const std::string& label = pres.basis_element(idx).label;
        if (a != 1) {
            out += a.get_str();
            out += ' ';
            out += label;
        } else {
            out += label;
        }
    }
    return out;
}

} // namespace qh
