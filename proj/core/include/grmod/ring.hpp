#pragma once

#include <string>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

/* Monomial in a fixed number of variables; dense exponent vector with the
 * degree cached alongside. */
struct Monomial {
    std::vector<int> exps;
    int deg = 0;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0), 0}; }

    static Monomial variable(int nvars, int i) {
        Monomial m = one(nvars);
        m.exps[static_cast<std::size_t>(i)] = 1;
        m.deg = 1;
        return m;
    }

    static Monomial of(std::vector<int> e) {
        int d = 0;
        for (int x : e)
            d += x;
        return Monomial{std::move(e), d};
    }

    int nvars() const noexcept { return static_cast<int>(exps.size()); }

    bool is_one() const noexcept { return deg == 0; }

    bool operator==(const Monomial& o) const noexcept { return exps == o.exps; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, assumes divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/* Graded reverse lexicographic order: higher degree wins; within a degree the
 * monomial with the smaller exponent in the last differing variable is the
 * larger one. Returns -1, 0, 1 for a < b, a == b, a > b. */
int degrevlex_cmp(const Monomial& a, const Monomial& b);

/* The ambient polynomial ring: GF(p) coefficients and named variables. All
 * polynomial and module operations take the ring explicitly; monomials and
 * polynomials themselves are plain data. */
class Ring {
  public:
    Ring(PrimeField field, std::vector<std::string> variables);

    const PrimeField& field() const noexcept { return field_; }
    int nvars() const noexcept { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::string& variable(int i) const { return vars_.at(static_cast<std::size_t>(i)); }

    /* index of a variable name, or -1 */
    int variable_index(const std::string& name) const;

    bool operator==(const Ring& o) const noexcept {
        return field_ == o.field_ && vars_ == o.vars_;
    }

  private:
    PrimeField field_;
    std::vector<std::string> vars_;
};

}  // namespace grmod
