#include "grmod/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grmod {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] += b.exps[i];
    r.deg += b.deg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg)
        return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] -= a.exps[i];
    r.deg -= a.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
        r.deg += r.exps[i];
    }
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        r.exps[i] = std::min(a.exps[i], b.exps[i]);
        r.deg += r.exps[i];
    }
    return r;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size())
        throw std::invalid_argument("degrevlex_cmp: mismatched variable counts");
    if (a.deg != b.deg)
        return a.deg < b.deg ? -1 : 1;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i])
            return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
}

Ring::Ring(PrimeField field, std::vector<std::string> variables)
    : field_(field), vars_(std::move(variables)) {
    if (vars_.empty())
        throw std::invalid_argument("Ring: at least one variable required");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty())
            throw std::invalid_argument("Ring: empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("Ring: duplicate variable name '" + v + "'");
    }
    if (field_.characteristic() <= vars_.size())
        throw std::invalid_argument("Ring: characteristic must exceed the number of variables");
}

int Ring::variable_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

}  // namespace grmod
