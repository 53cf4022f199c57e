#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qh/partition.hpp"

namespace qh {

struct BasisElement {
    std::string label;  // "1", "h", "h2", "pt", "s2,1", ...
    int codim = 0;      // complex codimension
    Partition shape;    // Schubert index (single row for projective space)
};

// Sparse vector of exact rational coefficients over the basis of one space.
// No zero coefficient is ever stored.
class ClassVector {
public:
    ClassVector() = default;
    explicit ClassVector(std::string space_id) : space_(std::move(space_id)) {}

    const std::string& space() const { return space_; }
    const std::map<int, mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    mpq_class coeff(int index) const {
        auto it = coeffs_.find(index);
        return it == coeffs_.end() ? mpq_class(0) : it->second;
    }

    void set(int index, const mpq_class& value) {
        if (value == 0)
            coeffs_.erase(index);
        else
            coeffs_[index] = value;
    }

    void add(int index, const mpq_class& value) {
        auto it = coeffs_.find(index);
        if (it == coeffs_.end()) {
            if (value != 0) coeffs_.emplace(index, value);
            return;
        }
        it->second += value;
        if (it->second == 0) coeffs_.erase(it);
    }

    ClassVector& operator+=(const ClassVector& other);
    ClassVector& operator-=(const ClassVector& other);
    ClassVector& operator*=(const mpq_class& scalar);

    friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
    friend ClassVector operator*(const mpq_class& s, ClassVector v) { return v *= s; }

    bool operator==(const ClassVector& other) const {
        return space_ == other.space_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const ClassVector& other) const { return !(*this == other); }

private:
    std::string space_;
    std::map<int, mpq_class> coeffs_;
};

// Either P^n or G(k,n); P^n is carried as G(1,n+1) shape data so the Schubert
// combinatorics apply uniformly.
struct SpaceSpec {
    enum class Kind { Projective, Grassmannian };
    Kind kind = Kind::Projective;
    int k = 1;  // subspace dimension for G(k,n)
    int n = 1;  // ambient parameter: P^n or G(k,n)

    int box_rows() const { return kind == Kind::Projective ? 1 : k; }
    int box_cols() const { return kind == Kind::Projective ? n : n - k; }
};

// Graded basis with cached cup-product structure constants.
// Immutable after construction; safe for concurrent reads.
class RingPresentation {
public:
    RingPresentation(std::string space_id, SpaceSpec spec, int dimension, int c1deg,
                     std::vector<BasisElement> basis,
                     std::vector<ClassVector> structure);

    const std::string& space() const { return space_; }
    const SpaceSpec& spec() const { return spec_; }
    int dimension() const { return dimension_; }
    int c1deg() const { return c1deg_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& basis_element(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

    int unit_index() const { return unit_index_; }
    int point_index() const { return point_index_; }

    int index_of(const Partition& shape) const;            // throws if absent
    int index_of_label(const std::string& label) const;    // accepts aliases "1", "pt", "h", "h<k>"

    ClassVector basis_class(int index) const;
    const ClassVector& structure(int i, int j) const;

    ClassVector cup(const ClassVector& a, const ClassVector& b) const;
    mpq_class pairing(const ClassVector& a, const ClassVector& b) const;

private:
    std::string space_;
    SpaceSpec spec_;
    int dimension_;
    int c1deg_;
    std::vector<BasisElement> basis_;
    std::vector<ClassVector> structure_;  // rank*rank, row-major
    std::map<std::string, int> label_index_;
    std::map<std::vector<int>, int> shape_index_;
    int unit_index_ = -1;
    int point_index_ = -1;

    void check_space(const ClassVector& v, const char* who) const;
};

// Kunneth decomposition of the class of the diagonal: pairs (zeta_l, dual)
// with sum_l zeta_l <dual_l, alpha> = alpha for every class alpha.
struct DiagonalDecomposition {
    std::vector<std::pair<ClassVector, ClassVector>> pairs;
};

// zeta_l runs over the basis, the duals over the pairing-inverse basis.
// Throws if the pairing matrix is singular (malformed presentation).
DiagonalDecomposition diagonal_decomposition(const RingPresentation& pres);

std::string format_class(const RingPresentation& pres, const ClassVector& v);

} // namespace qh
