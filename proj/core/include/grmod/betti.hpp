#pragma once

#include <map>
#include <string>
#include <utility>

#include "grmod/hilbert.hpp"

namespace grmod {

/* Graded Betti numbers beta_{i,j}: i homological index, j internal degree.
 * Only positive entries are stored. */
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long v) {
        if (v != 0)
            entries[{i, j}] += v;
    }

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    int projective_dimension() const;

    /* e(Tor_i): largest j with beta_{i,j} != 0 */
    std::optional<int> max_shift(int i) const;

    /* max { j - i : beta_{i,j} != 0 } */
    int regularity() const;

    long long total(int i) const;

    /* sum over (i,j) of (-1)^i beta_{i,j} t^j */
    LaurentPoly euler_numerator() const;

    /* staircase text layout: columns i, rows j - i */
    std::string staircase() const;
};

}  // namespace grmod
