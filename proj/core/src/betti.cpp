#include "grmod/betti.hpp"

#include <algorithm>
#include <sstream>

namespace grmod {

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, v] : entries)
        pd = std::max(pd, ij.first);
    return pd;
}

std::optional<int> BettiTable::max_shift(int i) const {
    std::optional<int> e;
    for (const auto& [ij, v] : entries)
        if (ij.first == i && (!e || ij.second > *e))
            e = ij.second;
    return e;
}

int BettiTable::regularity() const {
    int reg = 0;
    bool any = false;
    for (const auto& [ij, v] : entries) {
        int slope = ij.second - ij.first;
        if (!any || slope > reg)
            reg = slope;
        any = true;
    }
    return reg;
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [ij, v] : entries)
        if (ij.first == i)
            t += v;
    return t;
}

LaurentPoly BettiTable::euler_numerator() const {
    LaurentPoly p;
    for (const auto& [ij, v] : entries)
        p.add_term(ij.second, ij.first % 2 == 0 ? v : -v);
    return p;
}

std::string BettiTable::staircase() const {
    std::ostringstream os;
    if (entries.empty()) {
        os << "(zero module)\n";
        return os.str();
    }
    int pd = projective_dimension();
    int row_lo = 0;
    int row_hi = 0;
    bool first = true;
    for (const auto& [ij, v] : entries) {
        int row = ij.second - ij.first;
        if (first) {
            row_lo = row_hi = row;
            first = false;
        } else {
            row_lo = std::min(row_lo, row);
            row_hi = std::max(row_hi, row);
        }
    }
    os << "      ";
    for (int i = 0; i <= pd; ++i) {
        std::string h = std::to_string(i);
        os << std::string(7 - h.size(), ' ') << h;
    }
    os << "\n";
    for (int row = row_lo; row <= row_hi; ++row) {
        std::string label = std::to_string(row) + ":";
        os << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
        for (int i = 0; i <= pd; ++i) {
            long long b = at(i, row + i);
            std::string cell = b == 0 ? "." : std::to_string(b);
            os << std::string(7 - std::min<std::size_t>(6, cell.size()), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace grmod
