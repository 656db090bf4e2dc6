#include "grmod/polynomial.hpp"

#include <algorithm>

namespace grmod {

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_cmp(a.mon, b.mon) > 0; }

}  // namespace

Polynomial Polynomial::from_terms(const PrimeField& K, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        std::uint32_t c = t.coeff % K.characteristic();
        if (c == 0)
            continue;
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coeff = K.add(out.back().coeff, c);
            if (out.back().coeff == 0)
                out.pop_back();
        } else {
            out.push_back(Term{c, std::move(t.mon)});
        }
    }
    Polynomial f;
    f.terms_ = std::move(out);
    return f;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

/* merge of two sorted term lists, g scaled by c */
static Polynomial merge_scaled(const PrimeField& K, const Polynomial& f, const Polynomial& g,
                               std::uint32_t c) {
    std::vector<Term> out;
    out.reserve(f.terms().size() + g.terms().size());
    std::size_t i = 0, j = 0;
    const auto& a = f.terms();
    const auto& b = g.terms();
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i >= a.size())
            cmp = -1;
        else if (j >= b.size())
            cmp = 1;
        else
            cmp = degrevlex_cmp(a[i].mon, b[j].mon);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            std::uint32_t cc = K.mul(c, b[j].coeff);
            if (cc != 0)
                out.push_back(Term{cc, b[j].mon});
            ++j;
        } else {
            std::uint32_t cc = K.add(a[i].coeff, K.mul(c, b[j].coeff));
            if (cc != 0)
                out.push_back(Term{cc, a[i].mon});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_add(const PrimeField& K, const Polynomial& f, const Polynomial& g) {
    return merge_scaled(K, f, g, 1);
}

Polynomial poly_sub(const PrimeField& K, const Polynomial& f, const Polynomial& g) {
    return merge_scaled(K, f, g, K.neg(1));
}

Polynomial poly_neg(const PrimeField& K, const Polynomial& f) {
    std::vector<Term> t = f.terms();
    for (Term& x : t)
        x.coeff = K.neg(x.coeff);
    return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial poly_scalar_mul(const PrimeField& K, std::uint32_t c, const Polynomial& f) {
    c %= K.characteristic();
    std::vector<Term> t;
    t.reserve(f.terms().size());
    for (const Term& x : f.terms()) {
        std::uint32_t cc = K.mul(c, x.coeff);
        if (cc != 0)
            t.push_back(Term{cc, x.mon});
    }
    return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial poly_term_mul(const PrimeField& K, const Polynomial& f, std::uint32_t c, const Monomial& m) {
    std::vector<Term> t;
    t.reserve(f.terms().size());
    for (const Term& x : f.terms()) {
        std::uint32_t cc = K.mul(c, x.coeff);
        if (cc != 0)
            t.push_back(Term{cc, mono_mul(x.mon, m)});
    }
    /* multiplying by a monomial preserves degrevlex order */
    return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial poly_mul(const PrimeField& K, const Polynomial& f, const Polynomial& g) {
    std::vector<Term> t;
    t.reserve(f.terms().size() * g.terms().size());
    for (const Term& a : f.terms())
        for (const Term& b : g.terms()) {
            std::uint32_t cc = K.mul(a.coeff, b.coeff);
            if (cc != 0)
                t.push_back(Term{cc, mono_mul(a.mon, b.mon)});
        }
    return Polynomial::from_terms(K, std::move(t));
}

}  // namespace grmod
