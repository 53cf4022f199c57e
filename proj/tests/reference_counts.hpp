#pragma once

// Hand-derived reference counts used as oracles independent of the engine.
//
// A degree-1 rational curve in G(2,4) is a pencil of lines: the lines through
// a vertex p inside a plane H of P^3. The Schubert conditions translate as
//   s1   (meet a fixed line m)       : always satisfied (the line from p to
//                                      H meet m lies in the pencil)
//   s2   (contain a fixed point a)   : a in H
//   s1,1 (lie inside a fixed plane P): p in P
//   s2,1 (through a in a plane P)    : a in H and p in P   (a in P given)
//   s2,2 (equal a fixed line L0)     : p on L0 and L0 in H
// Counting planes H and vertices p cut out by these linear conditions gives
// the table below; triples not listed (and any triple with the unit class)
// count zero. Example (s2, s2, s2,2): H would have to contain L0 and two
// general points, one condition too many, so the count is 0; whereas for
// (s2, s1,1, s2,2): H = span(L0, a), p = L0 meet P, exactly one pencil.

#include <set>
#include <string>
#include <vector>

inline const std::set<std::vector<std::string>>& g24_degree1_nonzero_triples() {
    static const std::set<std::vector<std::string>> table = {
        {"s1", "s2,1", "s2,2"},
        {"s2", "s1,1", "s2,2"},
        {"s2", "s2,1", "s2,1"},
        {"s1,1", "s2,1", "s2,1"},
    };
    return table;
}

// All four nonzero counts equal 1; every other gate-passing degree-1 triple
// on G(2,4) counts zero.
inline long g24_degree1_count(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    for (auto entry : g24_degree1_nonzero_triples()) {
        std::sort(entry.begin(), entry.end());
        if (entry == labels) return 1;
    }
    return 0;
}
