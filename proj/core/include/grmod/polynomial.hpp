#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grmod/ring.hpp"

namespace grmod {

struct Term {
    std::uint32_t coeff = 0;  // nonzero canonical residue
    Monomial mon;
};

/* Polynomial over GF(p): term list strictly decreasing in degrevlex, no zero
 * coefficients, no repeated monomials. The zero polynomial is the empty list. */
class Polynomial {
  public:
    Polynomial() = default;

    /* normalizes: sorts, merges duplicates, drops zeros */
    static Polynomial from_terms(const PrimeField& K, std::vector<Term> terms);

    /* trusts the input: strictly decreasing monomials, no zero coefficients */
    static Polynomial from_sorted_terms(std::vector<Term> terms) {
        Polynomial f;
        f.terms_ = std::move(terms);
        return f;
    }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(const PrimeField& K, int nvars, std::uint32_t c) {
        Polynomial f;
        if (c % K.characteristic() != 0)
            f.terms_.push_back(Term{c % K.characteristic(), Monomial::one(nvars)});
        return f;
    }

    static Polynomial monomial_term(std::uint32_t coeff, Monomial m) {
        Polynomial f;
        if (coeff != 0)
            f.terms_.push_back(Term{coeff, std::move(m)});
        return f;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading_term() const { return terms_.front(); }

    /* degree of the highest term; nullopt for the zero polynomial */
    std::optional<int> degree() const {
        if (terms_.empty())
            return std::nullopt;
        int d = terms_.front().mon.deg;
        for (const Term& t : terms_)
            if (t.mon.deg > d)
                d = t.mon.deg;
        return d;
    }

    bool is_homogeneous() const {
        for (const Term& t : terms_)
            if (t.mon.deg != terms_.front().mon.deg)
                return false;
        return true;
    }

    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_.front().mon.is_one();
    }

    bool operator==(const Polynomial& o) const;

  private:
    std::vector<Term> terms_;
};

Polynomial poly_add(const PrimeField& K, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const PrimeField& K, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const PrimeField& K, const Polynomial& f);
Polynomial poly_mul(const PrimeField& K, const Polynomial& f, const Polynomial& g);
Polynomial poly_scalar_mul(const PrimeField& K, std::uint32_t c, const Polynomial& f);
/* f * c*m for a single term; the workhorse of reduction */
Polynomial poly_term_mul(const PrimeField& K, const Polynomial& f, std::uint32_t c, const Monomial& m);

}  // namespace grmod
