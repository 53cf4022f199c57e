#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

// Integer partition with weakly decreasing parts and trailing zeros trimmed.
// Indexes Schubert classes: on G(k,n) a class sigma_lambda requires
// parts[0] <= n-k and at most k nonzero parts; |lambda| is its codimension.
struct Partition {
    std::vector<int> parts;

    Partition() = default;

    Partition(std::initializer_list<int> p) : parts(p) { normalize(); }

    explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

    void normalize() {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        if (!parts.empty() && parts.back() < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    // parts[i] with zero padding past the end (0-based row index)
    int part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    std::size_t rows() const { return parts.size(); }

    bool empty() const { return parts.empty(); }

    bool fits_box(int max_rows, int cols) const {
        return static_cast<int>(parts.size()) <= max_rows && (parts.empty() || parts[0] <= cols);
    }

    // Complementary partition in the max_rows x cols box (180-degree rotation).
    Partition complement(int max_rows, int cols) const {
        if (!fits_box(max_rows, cols))
            throw std::invalid_argument("partition does not fit the box");
        std::vector<int> out(static_cast<std::size_t>(max_rows));
        for (int i = 0; i < max_rows; ++i)
            out[static_cast<std::size_t>(i)] = cols - part(static_cast<std::size_t>(max_rows - 1 - i));
        return Partition(std::move(out));
    }

    bool operator==(const Partition& other) const { return parts == other.parts; }
    bool operator!=(const Partition& other) const { return parts != other.parts; }

    // "2,1" for (2,1); "" for the empty partition
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s;
    }
};

// Basis order: weight first, then reverse-lexicographic, so (2) precedes (1,1).
inline bool graded_less(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts > b.parts;
}

inline std::vector<Partition> partitions_in_box(int max_rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.emplace_back(Partition(std::vector<int>(cur)));
        if (row >= max_rows) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

} // namespace qh
