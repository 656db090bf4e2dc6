#include "grmod/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

/* subtract c*m*d from f in place */
void sub_scaled(const PrimeField& K, ModuleElement& f, std::uint32_t c, const Monomial& m,
                const ModuleElement& d) {
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
        if (d.comps[i].is_zero())
            continue;
        f.comps[i] = poly_sub(K, f.comps[i], poly_term_mul(K, d.comps[i], c, m));
    }
}

struct SPair {
    int degree;
    long seq;
    int i, j;

    bool operator<(const SPair& o) const {
        if (degree != o.degree)
            return degree < o.degree;
        return seq < o.seq;
    }
};

bool is_single_component(const ModuleElement& v) {
    int nz = 0;
    for (const Polynomial& f : v.comps)
        if (!f.is_zero())
            ++nz;
    return nz == 1;
}

/* Shared Buchberger worker; exprs empty when tracking is off. */
struct Engine {
    const Ring& R;
    FreeModule ambient;
    bool track;

    Engine(const Ring& ring, FreeModule amb, bool tracked)
        : R(ring), ambient(std::move(amb)), track(tracked) {}

    std::vector<ModuleElement> basis;
    std::vector<ModTerm> leads;
    std::vector<ModuleElement> exprs;

    std::set<SPair> queue;
    long seq_counter = 0;

    void validate(const ModuleElement& g) const {
        if (g.rank() != ambient.rank())
            throw std::invalid_argument("buchberger: generator rank mismatch");
        if (!element_is_homogeneous(ambient, g))
            throw std::invalid_argument("buchberger: inhomogeneous generator");
    }

    void push_pairs_for(int k) {
        for (int i = 0; i < k; ++i) {
            if (leads[static_cast<std::size_t>(i)].pos != leads[static_cast<std::size_t>(k)].pos)
                continue;
            Monomial lcm = mono_lcm(leads[static_cast<std::size_t>(i)].mon,
                                    leads[static_cast<std::size_t>(k)].mon);
            int deg = lcm.deg + ambient.gen_deg(leads[static_cast<std::size_t>(k)].pos);
            queue.insert(SPair{deg, seq_counter++, i, k});
        }
    }

    void append(ModuleElement g, ModuleElement expr) {
        leads.push_back(*leading_term(ambient, g));
        basis.push_back(std::move(g));
        if (track)
            exprs.push_back(std::move(expr));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    DivisionResult reduce(ModuleElement f) const {
        DivisionResult res;
        res.quotients.assign(basis.size(), Polynomial());
        res.remainder = ModuleElement::zero(ambient.rank());
        const PrimeField& K = R.field();
        while (!f.is_zero()) {
            ModTerm lt = *leading_term(ambient, f);
            bool reduced_one = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const ModTerm& dl = leads[k];
                if (dl.pos != lt.pos || !mono_divides(dl.mon, lt.mon))
                    continue;
                std::uint32_t c = K.div(lt.coeff, dl.coeff);
                Monomial m = mono_div(lt.mon, dl.mon);
                sub_scaled(K, f, c, m, basis[k]);
                res.quotients[k] =
                    poly_add(K, res.quotients[k], Polynomial::monomial_term(c, std::move(m)));
                reduced_one = true;
                break;
            }
            if (!reduced_one) {
                /* move the leading term to the remainder */
                Polynomial t = Polynomial::monomial_term(lt.coeff, lt.mon);
                auto& rc = res.remainder.comps[static_cast<std::size_t>(lt.pos)];
                rc = poly_add(K, rc, t);
                auto& fc = f.comps[static_cast<std::size_t>(lt.pos)];
                fc = poly_sub(K, fc, t);
            }
        }
        return res;
    }

    void run(const std::vector<ModuleElement>& gens, const std::vector<int>& input_degs) {
        const PrimeField& K = R.field();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].is_zero())
                continue;
            validate(gens[j]);
            ModuleElement expr;
            if (track)
                expr = ModuleElement::unit(static_cast<int>(input_degs.size()), static_cast<int>(j),
                                           Polynomial::constant(K, R.nvars(), 1));
            /* reduce incoming generators against the current basis so equal or
             * dependent inputs collapse immediately */
            DivisionResult d = reduce(gens[j]);
            if (d.remainder.is_zero())
                continue;
            if (track)
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!d.quotients[k].is_zero())
                        for (std::size_t c = 0; c < expr.comps.size(); ++c)
                            expr.comps[c] = poly_sub(K, expr.comps[c],
                                                     poly_mul(K, d.quotients[k], exprs[k].comps[c]));
            append(std::move(d.remainder), std::move(expr));
        }

        while (!queue.empty()) {
            SPair pr = *queue.begin();
            queue.erase(queue.begin());
            const ModTerm& li = leads[static_cast<std::size_t>(pr.i)];
            const ModTerm& lj = leads[static_cast<std::size_t>(pr.j)];

            /* Buchberger's product criterion; only valid in the ideal-like
             * case where both elements live in a single component */
            if (mono_gcd(li.mon, lj.mon).is_one() && is_single_component(basis[static_cast<std::size_t>(pr.i)]) &&
                is_single_component(basis[static_cast<std::size_t>(pr.j)]))
                continue;

            Monomial lcm = mono_lcm(li.mon, lj.mon);
            std::uint32_t ci = K.inv(li.coeff);
            std::uint32_t cj = K.inv(lj.coeff);
            Monomial mi = mono_div(lcm, li.mon);
            Monomial mj = mono_div(lcm, lj.mon);

            ModuleElement s = elem_term_mul(K, basis[static_cast<std::size_t>(pr.i)], ci, mi);
            sub_scaled(K, s, cj, mj, basis[static_cast<std::size_t>(pr.j)]);
            if (s.is_zero())
                continue;
            DivisionResult d = reduce(std::move(s));
            if (d.remainder.is_zero())
                continue;

            ModuleElement expr;
            if (track) {
                expr = ModuleElement::zero(static_cast<int>(input_degs.size()));
                auto acc = [&](std::uint32_t c, const Monomial& m, const ModuleElement& e, bool neg) {
                    Polynomial t = Polynomial::monomial_term(neg ? K.neg(c) : c, m);
                    for (std::size_t x = 0; x < expr.comps.size(); ++x)
                        expr.comps[x] = poly_add(K, expr.comps[x], poly_mul(K, t, e.comps[x]));
                };
                acc(ci, mi, exprs[static_cast<std::size_t>(pr.i)], false);
                acc(cj, mj, exprs[static_cast<std::size_t>(pr.j)], true);
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!d.quotients[k].is_zero())
                        for (std::size_t c = 0; c < expr.comps.size(); ++c)
                            expr.comps[c] = poly_sub(K, expr.comps[c],
                                                     poly_mul(K, d.quotients[k], exprs[k].comps[c]));
            }
            append(std::move(d.remainder), std::move(expr));
        }

        finalize();
    }

    void finalize() {
        const PrimeField& K = R.field();
        /* monic */
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::uint32_t inv = K.inv(leads[k].coeff);
            if (inv != 1) {
                basis[k] = elem_scalar_mul(K, inv, basis[k]);
                if (track)
                    exprs[k] = elem_scalar_mul(K, inv, exprs[k]);
                leads[k].coeff = 1;
            }
        }
        /* minimal: drop any element whose leading term another's divides */
        std::vector<bool> removed(basis.size(), false);
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t h = 0; h < basis.size(); ++h) {
                if (h == k || removed[h] || removed[k])
                    continue;
                if (leads[h].pos != leads[k].pos || !mono_divides(leads[h].mon, leads[k].mon))
                    continue;
                if (leads[h].mon == leads[k].mon && h > k)
                    continue; /* equal leads: the earlier one survives */
                removed[k] = true;
            }
        std::vector<ModuleElement> kept, kept_exprs;
        std::vector<ModTerm> kept_leads;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!removed[k]) {
                kept.push_back(std::move(basis[k]));
                kept_leads.push_back(leads[k]);
                if (track)
                    kept_exprs.push_back(std::move(exprs[k]));
            }
        basis = std::move(kept);
        leads = std::move(kept_leads);
        exprs = std::move(kept_exprs);

        /* tail-reduce each element modulo the others */
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<ModuleElement> others;
            std::vector<std::size_t> idx;
            for (std::size_t h = 0; h < basis.size(); ++h)
                if (h != k) {
                    others.push_back(basis[h]);
                    idx.push_back(h);
                }
            Engine sub(R, ambient, false);
            sub.basis = others;
            for (const ModuleElement& o : others)
                sub.leads.push_back(*leading_term(ambient, o));
            DivisionResult d = sub.reduce(basis[k]);
            if (track)
                for (std::size_t t = 0; t < idx.size(); ++t)
                    if (!d.quotients[t].is_zero())
                        for (std::size_t c = 0; c < exprs[k].comps.size(); ++c)
                            exprs[k].comps[c] =
                                poly_sub(K, exprs[k].comps[c],
                                         poly_mul(K, d.quotients[t], exprs[idx[t]].comps[c]));
            basis[k] = std::move(d.remainder);
        }
    }
};

}  // namespace

DivisionResult divide(const Ring& R, const FreeModule& ambient,
                      const std::vector<ModuleElement>& divisors, ModuleElement f) {
    Engine e(R, ambient, false);
    e.basis = divisors;
    for (const ModuleElement& d : divisors) {
        auto lt = leading_term(ambient, d);
        if (!lt)
            throw std::invalid_argument("divide: zero divisor element");
        e.leads.push_back(*lt);
    }
    return e.reduce(std::move(f));
}

GBasis buchberger(const Ring& R, const FreeModule& ambient, std::vector<ModuleElement> gens) {
    Engine e(R, ambient, false);
    e.run(gens, {});
    return GBasis{ambient, std::move(e.basis), true};
}

TrackedGB buchberger_tracked(const Ring& R, const FreeModule& ambient,
                             const std::vector<ModuleElement>& gens,
                             const std::vector<int>& input_degs) {
    if (gens.size() != input_degs.size())
        throw std::invalid_argument("buchberger_tracked: degree list mismatch");
    Engine e(R, ambient, true);
    e.run(gens, input_degs);
    return TrackedGB{GBasis{ambient, std::move(e.basis), true}, std::move(e.exprs),
                     FreeModule{input_degs}};
}

ModuleElement normal_form(const Ring& R, const GBasis& G, const ModuleElement& f) {
    if (G.gens.empty())
        return f;
    return divide(R, G.ambient, G.gens, f).remainder;
}

bool buchberger_criterion_holds(const Ring& R, const GBasis& G) {
    const PrimeField& K = R.field();
    for (std::size_t i = 0; i < G.gens.size(); ++i)
        for (std::size_t j = i + 1; j < G.gens.size(); ++j) {
            ModTerm li = *leading_term(G.ambient, G.gens[i]);
            ModTerm lj = *leading_term(G.ambient, G.gens[j]);
            if (li.pos != lj.pos)
                continue;
            Monomial lcm = mono_lcm(li.mon, lj.mon);
            ModuleElement s =
                elem_term_mul(K, G.gens[i], K.inv(li.coeff), mono_div(lcm, li.mon));
            sub_scaled(K, s, K.inv(lj.coeff), mono_div(lcm, lj.mon), G.gens[j]);
            if (!divide(R, G.ambient, G.gens, std::move(s)).remainder.is_zero())
                return false;
        }
    return true;
}

std::vector<ModuleElement> syzygies_of_gb(const Ring& R, const GBasis& G) {
    const PrimeField& K = R.field();
    const int t = static_cast<int>(G.gens.size());
    std::vector<ModuleElement> syz;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            ModTerm li = *leading_term(G.ambient, G.gens[static_cast<std::size_t>(i)]);
            ModTerm lj = *leading_term(G.ambient, G.gens[static_cast<std::size_t>(j)]);
            if (li.pos != lj.pos)
                continue;
            Monomial lcm = mono_lcm(li.mon, lj.mon);
            std::uint32_t ci = K.inv(li.coeff);
            std::uint32_t cj = K.inv(lj.coeff);
            Monomial mi = mono_div(lcm, li.mon);
            Monomial mj = mono_div(lcm, lj.mon);
            ModuleElement s = elem_term_mul(K, G.gens[static_cast<std::size_t>(i)], ci, mi);
            sub_scaled(K, s, cj, mj, G.gens[static_cast<std::size_t>(j)]);
            DivisionResult d = divide(R, G.ambient, G.gens, std::move(s));
            if (!d.remainder.is_zero())
                throw contract_error("syzygies_of_gb: input is not a Groebner basis");
            ModuleElement v = ModuleElement::zero(t);
            v.comps[static_cast<std::size_t>(i)] = Polynomial::monomial_term(ci, mi);
            v.comps[static_cast<std::size_t>(j)] =
                poly_sub(K, v.comps[static_cast<std::size_t>(j)], Polynomial::monomial_term(cj, mj));
            for (int k = 0; k < t; ++k)
                v.comps[static_cast<std::size_t>(k)] = poly_sub(
                    K, v.comps[static_cast<std::size_t>(k)], d.quotients[static_cast<std::size_t>(k)]);
            if (!v.is_zero())
                syz.push_back(std::move(v));
        }
    return syz;
}

std::vector<ModuleElement> sequence_kernel(const Ring& R, const FreeModule& ambient,
                                           const std::vector<ModuleElement>& seq,
                                           const std::vector<int>& src_degs) {
    const PrimeField& K = R.field();
    const int n = static_cast<int>(seq.size());
    if (seq.size() != src_degs.size())
        throw std::invalid_argument("sequence_kernel: degree list mismatch");
    std::vector<ModuleElement> result;
    if (n == 0)
        return result;
    if (ambient.rank() == 0) {
        /* everything maps to the zero module */
        for (int j = 0; j < n; ++j)
            result.push_back(ModuleElement::unit(n, j, Polynomial::constant(K, R.nvars(), 1)));
        return result;
    }

    TrackedGB tg = buchberger_tracked(R, ambient, seq, src_degs);
    const auto& G = tg.gb;

    auto map_through = [&](const ModuleElement& s) {
        ModuleElement out = ModuleElement::zero(n);
        for (std::size_t k = 0; k < G.gens.size(); ++k) {
            if (s.comps[k].is_zero())
                continue;
            for (int c = 0; c < n; ++c)
                out.comps[static_cast<std::size_t>(c)] =
                    poly_add(K, out.comps[static_cast<std::size_t>(c)],
                             poly_mul(K, s.comps[k], tg.exprs[k].comps[static_cast<std::size_t>(c)]));
        }
        return out;
    };

    for (const ModuleElement& s : syzygies_of_gb(R, G)) {
        ModuleElement v = map_through(s);
        if (!v.is_zero())
            result.push_back(std::move(v));
    }

    /* residual syzygies: input[j] minus its expression through the basis */
    for (int j = 0; j < n; ++j) {
        DivisionResult d = divide(R, ambient, G.gens, seq[static_cast<std::size_t>(j)]);
        if (!d.remainder.is_zero())
            throw contract_error("sequence_kernel: element not reduced by its own basis");
        ModuleElement v = ModuleElement::unit(n, j, Polynomial::constant(K, R.nvars(), 1));
        for (std::size_t k = 0; k < G.gens.size(); ++k) {
            if (d.quotients[k].is_zero())
                continue;
            for (int c = 0; c < n; ++c)
                v.comps[static_cast<std::size_t>(c)] =
                    poly_sub(K, v.comps[static_cast<std::size_t>(c)],
                             poly_mul(K, d.quotients[k], tg.exprs[k].comps[static_cast<std::size_t>(c)]));
        }
        if (!v.is_zero())
            result.push_back(std::move(v));
    }
    return result;
}

}  // namespace grmod
