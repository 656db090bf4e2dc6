#pragma once

#include <map>
#include <optional>

#include "grmod/groebner.hpp"

namespace grmod {

/* Integer Laurent polynomial in one formal variable t. */
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly one() {
        LaurentPoly p;
        p.c_[0] = 1;
        return p;
    }

    static LaurentPoly term(long long coeff, int degree) {
        LaurentPoly p;
        if (coeff != 0)
            p.c_[degree] = coeff;
        return p;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    const std::map<int, long long>& coeffs() const noexcept { return c_; }
    long long coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? 0 : it->second;
    }
    int lowest_degree() const { return c_.begin()->first; }    // nonzero only
    int highest_degree() const { return c_.rbegin()->first; }  // nonzero only

    long long eval_at_one() const {
        long long s = 0;
        for (const auto& [k, v] : c_)
            s += v;
        return s;
    }

    void add_term(int degree, long long coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = c_.emplace(degree, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                c_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [k, v] : o.c_)
            r.add_term(k, v);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [k, v] : o.c_)
            r.add_term(k, -v);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [k1, v1] : c_)
            for (const auto& [k2, v2] : o.c_)
                r.add_term(k1 + k2, v1 * v2);
        return r;
    }

    /* exact quotient by (1 - t); requires eval_at_one() == 0 */
    LaurentPoly divided_by_one_minus_t() const;

    bool operator==(const LaurentPoly& o) const noexcept { return c_ == o.c_; }

  private:
    std::map<int, long long> c_;
};

/* Finite Hilbert function of a finite-length module: degree -> dimension. */
struct FiniteHilbertFunction {
    std::map<int, long long> support;  // positive entries only
    long long total_length = 0;

    bool is_zero() const noexcept { return support.empty(); }
    long long at(int n) const {
        auto it = support.find(n);
        return it == support.end() ? 0 : it->second;
    }
    std::optional<int> min_degree() const {
        return support.empty() ? std::nullopt : std::optional<int>(support.begin()->first);
    }
    std::optional<int> max_degree() const {
        return support.empty() ? std::nullopt : std::optional<int>(support.rbegin()->first);
    }
    bool operator==(const FiniteHilbertFunction& o) const {
        return support == o.support && total_length == o.total_length;
    }
};

/* flip degrees: dual has dimension in degree n equal to input's in -n */
FiniteHilbertFunction dual_hilbert_function(const FiniteHilbertFunction& f);

/* Hilbert series data of a subquotient F/N of a twisted free module over r
 * variables: series = numerator / (1-t)^r. After cancelling all (1-t)
 * factors the denominator exponent is the Krull dimension and the reduced
 * numerator at t=1 the multiplicity (= length when the dimension is 0).
 * The zero module gets krull_dim -1 and multiplicity 0. */
struct HilbertData {
    LaurentPoly numerator;
    int denom_exponent = 0;  // r
    LaurentPoly reduced_numerator;
    int krull_dim = -1;
    long long multiplicity = 0;
    /* initial degree of the submodule N itself (a(I) for ideals); nullopt
     * when N = 0 */
    std::optional<int> submodule_initial_degree;

    bool is_zero_module() const noexcept { return reduced_numerator.is_zero(); }

    /* Hilbert function of F/N at degree n */
    long long hf(int n) const;

    /* smallest degree with nonzero Hilbert function; nullopt for the zero
     * module. Equals the lowest degree of the reduced numerator. */
    std::optional<int> module_initial_degree() const;

    /* full finite Hilbert function; requires krull_dim <= 0 */
    FiniteHilbertFunction finite_hf() const;
};

/* Hilbert data of F/N where G is a Gröbner basis of N inside the ambient
 * twisted free module, computed combinatorially from the leading-term
 * module. */
HilbertData hilbert_data(const Ring& R, const GBasis& G);

/* numerator of R/(monomial ideal); exposed for testing */
LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens);

}  // namespace grmod
