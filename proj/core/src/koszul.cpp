#include "grmod/koszul.hpp"

#include <stdexcept>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

/* i-subsets of {0..s-1} in colex order; for equal-size subsets this is the
 * numeric order of the characteristic bitmasks */
std::vector<std::vector<int>> subsets(int s, int i) {
    std::vector<std::vector<int>> out;
    if (i < 0 || i > s)
        return out;
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << s); ++m)
        if (__builtin_popcount(m) == i)
            masks.push_back(m);
    for (unsigned m : masks) {
        std::vector<int> sub;
        for (int k = 0; k < s; ++k)
            if (m & (1u << k))
                sub.push_back(k);
        out.push_back(std::move(sub));
    }
    return out;
}

int subset_degree(const std::vector<int>& S, const std::vector<int>& form_degs) {
    int d = 0;
    for (int k : S)
        d += form_degs[static_cast<std::size_t>(k)];
    return d;
}

int subset_find(const std::vector<std::vector<int>>& subs, const std::vector<int>& S) {
    for (std::size_t k = 0; k < subs.size(); ++k)
        if (subs[k] == S)
            return static_cast<int>(k);
    return -1;
}

}  // namespace

KoszulComplex koszul_complex(const Ring& R, const std::vector<Polynomial>& forms,
                             const PresentedModule& M) {
    const PrimeField& K = R.field();
    const int s = static_cast<int>(forms.size());
    std::vector<int> form_degs;
    for (const Polynomial& f : forms) {
        if (f.is_zero() || !f.is_homogeneous())
            throw std::invalid_argument("koszul_complex: forms must be nonzero homogeneous");
        form_degs.push_back(*f.degree());
    }

    KoszulComplex C;
    C.forms = forms;
    const FreeModule& G = M.generators();
    const GradedMatrix& rho = M.relations();
    const int m = G.rank();

    std::vector<std::vector<std::vector<int>>> subs;
    for (int i = 0; i <= s; ++i)
        subs.push_back(subsets(s, i));

    for (int i = 0; i <= s; ++i) {
        FreeModule term;
        for (const auto& S : subs[static_cast<std::size_t>(i)]) {
            int dS = subset_degree(S, form_degs);
            for (int g = 0; g < m; ++g)
                term.gen_degs.push_back(G.gen_deg(g) + dS);
        }
        C.terms.push_back(term);

        /* one copy of M's relations per subset, twisted by the subset degree */
        GradedMatrix rel = GradedMatrix::zero(term.gen_degs, {});
        for (std::size_t si = 0; si < subs[static_cast<std::size_t>(i)].size(); ++si) {
            int dS = subset_degree(subs[static_cast<std::size_t>(i)][si], form_degs);
            for (int j = 0; j < rho.cols(); ++j) {
                rel.src_degs.push_back(rho.src_degs[static_cast<std::size_t>(j)] + dS);
                for (int rr = 0; rr < term.rank(); ++rr)
                    rel.entries[static_cast<std::size_t>(rr)].push_back(
                        (rr >= static_cast<int>(si) * m && rr < static_cast<int>(si + 1) * m)
                            ? rho.at(rr - static_cast<int>(si) * m, j)
                            : Polynomial::zero());
            }
        }
        C.term_relations.push_back(std::move(rel));
    }

    for (int i = 1; i <= s; ++i) {
        const auto& src_subs = subs[static_cast<std::size_t>(i)];
        const auto& tgt_subs = subs[static_cast<std::size_t>(i - 1)];
        GradedMatrix D = GradedMatrix::zero(C.terms[static_cast<std::size_t>(i - 1)].gen_degs,
                                            C.terms[static_cast<std::size_t>(i)].gen_degs);
        for (std::size_t si = 0; si < src_subs.size(); ++si) {
            const auto& S = src_subs[si];
            for (std::size_t kpos = 0; kpos < S.size(); ++kpos) {
                int k = S[kpos];
                std::vector<int> T = S;
                T.erase(T.begin() + static_cast<std::ptrdiff_t>(kpos));
                int ti = subset_find(tgt_subs, T);
                Polynomial entry = (kpos % 2 == 0) ? forms[static_cast<std::size_t>(k)]
                                                   : poly_neg(K, forms[static_cast<std::size_t>(k)]);
                for (int g = 0; g < m; ++g)
                    D.at(ti * m + g, static_cast<int>(si) * m + g) = entry;
            }
        }
        C.diffs.push_back(std::move(D));
    }
    return C;
}

PresentedModule koszul_homology(const Ring& R, const std::vector<Polynomial>& forms,
                                const PresentedModule& M, int i) {
    const int s = static_cast<int>(forms.size());
    if (i < 0 || i > s)
        return PresentedModule::free_module(R, FreeModule{{}});
    if (s == 0)
        return M;  // H_0 of the empty sequence

    KoszulComplex C = koszul_complex(R, forms, M);
    const FreeModule& term = C.terms[static_cast<std::size_t>(i)];
    GradedMatrix d_out = (i >= 1) ? C.diffs[static_cast<std::size_t>(i - 1)]
                                  : GradedMatrix::zero({}, term.gen_degs);
    GradedMatrix d_in = (i < s) ? C.diffs[static_cast<std::size_t>(i)]
                                : GradedMatrix::zero(term.gen_degs, {});
    GradedMatrix rho_tgt = (i >= 1) ? C.term_relations[static_cast<std::size_t>(i - 1)]
                                    : GradedMatrix::zero({}, {});
    return homology_at(R, d_in, d_out, C.term_relations[static_cast<std::size_t>(i)], rho_tgt);
}

PresentedModule koszul_cohomology(const Ring& R, const std::vector<Polynomial>& forms,
                                  const PresentedModule& M, int i) {
    const int s = static_cast<int>(forms.size());
    if (i < 0 || i > s)
        return PresentedModule::free_module(R, FreeModule{{}});
    if (s == 0)
        return M;

    /* Hom(K_.(f;R), M): the cochain differential delta^i is the transpose of
     * d_{i+1}, and term i is a direct sum of copies of M twisted by minus the
     * subset degrees. Build via the homology-complex matrices on R and dress
     * them with M's generators. */
    KoszulComplex CR = koszul_complex(R, forms, PresentedModule::free_module(R, FreeModule{{0}}));
    const FreeModule& G = M.generators();
    const GradedMatrix& rho = M.relations();
    const int m = G.rank();

    auto hom_term = [&](int spot) {
        FreeModule F;
        for (int a : CR.terms[static_cast<std::size_t>(spot)].gen_degs)
            for (int g = 0; g < m; ++g)
                F.gen_degs.push_back(G.gen_deg(g) - a);
        return F;
    };

    auto hom_relations = [&](int spot) {
        FreeModule F = hom_term(spot);
        GradedMatrix rel = GradedMatrix::zero(F.gen_degs, {});
        int blocks = CR.terms[static_cast<std::size_t>(spot)].rank();
        for (int b = 0; b < blocks; ++b) {
            int a = CR.terms[static_cast<std::size_t>(spot)].gen_deg(b);
            for (int j = 0; j < rho.cols(); ++j) {
                rel.src_degs.push_back(rho.src_degs[static_cast<std::size_t>(j)] - a);
                for (int rr = 0; rr < F.rank(); ++rr)
                    rel.entries[static_cast<std::size_t>(rr)].push_back(
                        (rr >= b * m && rr < (b + 1) * m) ? rho.at(rr - b * m, j)
                                                          : Polynomial::zero());
            }
        }
        return rel;
    };

    /* delta^spot: Hom(K_spot) -> Hom(K_{spot+1}) is d_{spot+1} transposed,
     * tensored with the identity on M's generators */
    auto delta = [&](int spot) {
        FreeModule src = hom_term(spot);
        FreeModule tgt = hom_term(spot + 1);
        GradedMatrix D = GradedMatrix::zero(tgt.gen_degs, src.gen_degs);
        const GradedMatrix& d = CR.diffs[static_cast<std::size_t>(spot)];  // K_{spot+1} -> K_spot
        for (int a = 0; a < d.rows(); ++a)
            for (int b = 0; b < d.cols(); ++b) {
                if (d.at(a, b).is_zero())
                    continue;
                for (int g = 0; g < m; ++g)
                    D.at(b * m + g, a * m + g) = d.at(a, b);
            }
        return D;
    };

    GradedMatrix d_in = (i >= 1) ? delta(i - 1) : GradedMatrix::zero(hom_term(0).gen_degs, {});
    GradedMatrix d_out = (i < s) ? delta(i) : GradedMatrix::zero({}, hom_term(s).gen_degs);
    GradedMatrix rho_tgt = (i < s) ? hom_relations(i + 1) : GradedMatrix::zero({}, {});
    return homology_at(R, d_in, d_out, hom_relations(i), rho_tgt);
}

BettiTable tor_dimensions(const Ring& R, const PresentedModule& M, int window_lo, int window_hi) {
    std::vector<Polynomial> vars;
    for (int v = 0; v < R.nvars(); ++v)
        vars.push_back(Polynomial::monomial_term(1, Monomial::variable(R.nvars(), v)));
    BettiTable T;
    for (int i = 0; i <= R.nvars(); ++i) {
        PresentedModule H = koszul_homology(R, vars, M, i);
        for (int j = window_lo; j <= window_hi; ++j)
            T.add(i, j, H.dim_at(j));
    }
    return T;
}

}  // namespace grmod
