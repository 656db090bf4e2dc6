#include "grmod/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace grmod {

LaurentPoly LaurentPoly::divided_by_one_minus_t() const {
    if (is_zero())
        return LaurentPoly();
    if (eval_at_one() != 0)
        throw std::invalid_argument("LaurentPoly: not divisible by (1-t)");
    LaurentPoly q;
    long long run = 0;
    int lo = lowest_degree(), hi = highest_degree();
    for (int k = lo; k <= hi; ++k) {
        run += coeff(k);
        if (k < hi)
            q.add_term(k, run);
    }
    return q;
}

FiniteHilbertFunction dual_hilbert_function(const FiniteHilbertFunction& f) {
    FiniteHilbertFunction d;
    for (const auto& [n, v] : f.support)
        d.support[-n] = v;
    d.total_length = f.total_length;
    return d;
}

namespace {

/* drop generators divisible by another; deduplicates too */
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<bool> redundant(gens.size(), false);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j || redundant[j])
                continue;
            if (mono_divides(gens[j], gens[i]) && !(gens[j] == gens[i] && j > i)) {
                redundant[i] = true;
                break;
            }
        }
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!redundant[i])
            out.push_back(std::move(gens[i]));
    return out;
}

bool is_pure_power(const Monomial& m) {
    int nz = 0;
    for (int e : m.exps)
        if (e > 0)
            ++nz;
    return nz <= 1;
}

LaurentPoly numerator_rec(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return LaurentPoly::one();
    for (const Monomial& g : gens)
        if (g.is_one())
            return LaurentPoly();

    bool all_pure = std::all_of(gens.begin(), gens.end(), is_pure_power);
    if (all_pure) {
        /* minimality makes the variables distinct: product formula */
        LaurentPoly num = LaurentPoly::one();
        for (const Monomial& g : gens)
            num = num * (LaurentPoly::one() - LaurentPoly::term(1, g.deg));
        return num;
    }

    /* pivot variable: the most frequent one; if every count is 1, pick one from a
     * non-pure generator so the sum branch strictly shrinks */
    const int nv = gens.front().nvars();
    std::vector<int> count(static_cast<std::size_t>(nv), 0);
    for (const Monomial& g : gens)
        for (int i = 0; i < nv; ++i)
            if (g.exps[static_cast<std::size_t>(i)] > 0)
                ++count[static_cast<std::size_t>(i)];
    int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[static_cast<std::size_t>(pivot)] <= 1) {
        for (const Monomial& g : gens)
            if (!is_pure_power(g)) {
                for (int i = 0; i < nv; ++i)
                    if (g.exps[static_cast<std::size_t>(i)] > 0) {
                        pivot = i;
                        break;
                    }
                break;
            }
    }

    Monomial p = Monomial::variable(nv, pivot);

    /* N(I) = N(I + (p)) + t * N(I : p) */
    std::vector<Monomial> plus;
    for (const Monomial& g : gens)
        if (!mono_divides(p, g))
            plus.push_back(g);
    plus.push_back(p);

    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens)
        colon.push_back(mono_div(g, mono_gcd(g, p)));

    return numerator_rec(std::move(plus)) + LaurentPoly::term(1, 1) * numerator_rec(std::move(colon));
}

}  // namespace

LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens) {
    return numerator_rec(std::move(gens));
}

long long HilbertData::hf(int n) const {
    if (reduced_numerator.is_zero())
        return 0;
    if (krull_dim <= 0)
        return reduced_numerator.coeff(n);
    long long sum = 0;
    const int d = krull_dim;
    for (const auto& [k, v] : reduced_numerator.coeffs()) {
        if (k > n)
            break;
        /* number of monomials of degree n-k in d variables */
        long long b = 1;
        for (int i = 1; i <= d - 1; ++i)
            b = b * (n - k + i) / i;
        sum += v * b;
    }
    return sum;
}

std::optional<int> HilbertData::module_initial_degree() const {
    if (reduced_numerator.is_zero())
        return std::nullopt;
    return reduced_numerator.lowest_degree();
}

FiniteHilbertFunction HilbertData::finite_hf() const {
    if (krull_dim > 0)
        throw std::invalid_argument("finite_hf: module has positive dimension");
    FiniteHilbertFunction f;
    for (const auto& [k, v] : reduced_numerator.coeffs()) {
        if (v < 0)
            throw std::logic_error("finite_hf: negative dimension in reduced numerator");
        f.support[k] = v;
        f.total_length += v;
    }
    return f;
}

HilbertData hilbert_data(const Ring& R, const GBasis& G) {
    HilbertData H;
    H.denom_exponent = R.nvars();

    /* leading-term module, bucketed by position */
    std::vector<std::vector<Monomial>> lt_by_pos(static_cast<std::size_t>(G.ambient.rank()));
    std::optional<int> sub_a;
    for (const ModuleElement& g : G.gens) {
        ModTerm lt = *leading_term(G.ambient, g);
        lt_by_pos[static_cast<std::size_t>(lt.pos)].push_back(lt.mon);
        int d = *element_degree(G.ambient, g);
        if (!sub_a || d < *sub_a)
            sub_a = d;
    }
    H.submodule_initial_degree = sub_a;

    for (int pos = 0; pos < G.ambient.rank(); ++pos) {
        LaurentPoly num = monomial_ideal_numerator(lt_by_pos[static_cast<std::size_t>(pos)]);
        H.numerator = H.numerator + LaurentPoly::term(1, G.ambient.gen_deg(pos)) * num;
    }

    H.reduced_numerator = H.numerator;
    int cancelled = 0;
    while (!H.reduced_numerator.is_zero() && H.reduced_numerator.eval_at_one() == 0) {
        H.reduced_numerator = H.reduced_numerator.divided_by_one_minus_t();
        ++cancelled;
    }
    if (H.reduced_numerator.is_zero()) {
        H.krull_dim = -1;
        H.multiplicity = 0;
    } else {
        H.krull_dim = R.nvars() - cancelled;
        H.multiplicity = H.reduced_numerator.eval_at_one();
        if (H.multiplicity <= 0)
            throw std::logic_error("hilbert_data: nonpositive multiplicity");
    }
    return H;
}

}  // namespace grmod
