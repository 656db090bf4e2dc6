#include "grmod/duality.hpp"

#include <random>
#include <stdexcept>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

/* Hom(F, R(-r)) of a twisted free module: generator degrees r - a */
std::vector<int> hom_degs(const Ring& R, const FreeModule& F) {
    std::vector<int> d;
    d.reserve(F.gen_degs.size());
    for (int a : F.gen_degs)
        d.push_back(R.nvars() - a);
    return d;
}

}  // namespace

std::vector<DeficiencyModule> deficiency_modules(const Ring& R, const PresentedModule& M) {
    if (M.is_zero())
        throw std::invalid_argument("deficiency_modules: zero module");
    const int r = R.nvars();
    const int d = M.krull_dim();

    FreeResolution res = minimal_free_resolution(R, M);
    const int pd = res.length();

    /* Hom(F_., R(-r)): transposed differentials with flipped degrees */
    std::vector<GradedMatrix> codiffs;  // codiffs[k]: Hom(F_k) -> Hom(F_{k+1})
    for (int k = 0; k < pd; ++k) {
        GradedMatrix t = res.diffs[static_cast<std::size_t>(k)].transposed();
        t.src_degs = hom_degs(R, res.frees[static_cast<std::size_t>(k)]);
        t.tgt_degs = hom_degs(R, res.frees[static_cast<std::size_t>(k + 1)]);
        codiffs.push_back(std::move(t));
    }

    std::vector<DeficiencyModule> out;
    for (int i = 0; i <= d; ++i) {
        int spot = r - i;
        PresentedModule Ki = PresentedModule::free_module(R, FreeModule{{}});
        if (spot >= 0 && spot <= pd) {
            std::vector<int> here = hom_degs(R, res.frees[static_cast<std::size_t>(spot)]);
            GradedMatrix incoming = (spot >= 1)
                                        ? codiffs[static_cast<std::size_t>(spot - 1)]
                                        : GradedMatrix::zero(here, {});
            GradedMatrix outgoing = (spot < pd)
                                        ? codiffs[static_cast<std::size_t>(spot)]
                                        : GradedMatrix::zero({}, here);
            Ki = homology_at(R, incoming, outgoing);
        }
        if (!Ki.is_zero()) {
            if (i < d && Ki.krull_dim() > i)
                throw std::logic_error("deficiency_modules: dim K^i exceeds i");
            if (i == d && Ki.krull_dim() != d)
                throw std::logic_error("deficiency_modules: canonical module has wrong dimension");
            /* downstream Koszul complexes tensor these repeatedly; a pruned
             * presentation keeps them small */
            Ki = minimalize(Ki);
        }
        if (i == d && Ki.is_zero())
            throw std::logic_error("deficiency_modules: canonical module vanished");
        out.push_back(DeficiencyModule{i, std::move(Ki)});
    }
    return out;
}

std::map<int, long long> local_cohomology_hf(const Ring& R, const std::vector<DeficiencyModule>& defs,
                                             int i, int window_lo, int window_hi) {
    (void)R;
    std::map<int, long long> hf;
    const PresentedModule* Ki = nullptr;
    for (const DeficiencyModule& D : defs)
        if (D.index == i)
            Ki = &D.module;
    for (int n = window_lo; n <= window_hi; ++n) {
        long long v = Ki ? Ki->dim_at(-n) : 0;
        if (v != 0)
            hf[n] = v;
    }
    return hf;
}

std::optional<int> local_cohomology_end(const std::vector<DeficiencyModule>& defs, int i) {
    for (const DeficiencyModule& D : defs)
        if (D.index == i && !D.module.is_zero())
            return -*D.module.hilbert().module_initial_degree();
    return std::nullopt;
}

int regularity_cohomological(const Ring& R, const PresentedModule& M) {
    std::vector<DeficiencyModule> defs = deficiency_modules(R, M);
    bool any = false;
    int reg = 0;
    for (const DeficiencyModule& D : defs) {
        auto e = local_cohomology_end(defs, D.index);
        if (!e)
            continue;
        int v = *e + D.index;
        if (!any || v > reg)
            reg = v;
        any = true;
    }
    if (!any)
        throw std::logic_error("regularity_cohomological: all local cohomology vanished");
    return reg;
}

namespace {

/* M/(l_1..l_k)M as a presentation: M's relations plus columns l_j * e_g */
PresentedModule quotient_by_forms(const Ring& R, const PresentedModule& M,
                                  const std::vector<Polynomial>& forms, int k) {
    GradedMatrix rel = M.relations();
    for (int j = 0; j < k; ++j)
        for (int g = 0; g < M.generators().rank(); ++g) {
            const Polynomial& l = forms[static_cast<std::size_t>(j)];
            rel.src_degs.push_back(M.generators().gen_deg(g) + *l.degree());
            for (int i = 0; i < rel.rows(); ++i)
                rel.entries[static_cast<std::size_t>(i)].push_back(
                    i == g ? l : Polynomial::zero());
        }
    return PresentedModule(R, M.generators(), std::move(rel));
}

/* The colon quotient Q = ((l_1..l_k)M : l_{k+1}) / (l_1..l_k)M has graded
 * dimensions h_Q(n) = h_k(n) - h_k(n+1) + h_{k+1}(n+1), where h_k is the
 * Hilbert function of M_k = M/(l_1..l_k)M: multiplication by l_{k+1} maps
 * (M_k)_n onto (M_k)_{n+1} up to the cokernel (M_{k+1})_{n+1}. So Q has
 * finite length exactly when N_{k+1}(t) - (1-t) N_k(t) is divisible by
 * (1-t)^r, a Laurent-polynomial check on the Hilbert numerators -- no kernel
 * computation needed. */
bool certify_prefixes(const Ring& R, const PresentedModule& M, const std::vector<Polynomial>& forms,
                      int* failing_prefix) {
    if (M.is_zero())
        return true;  // every colon quotient vanishes
    const int r = R.nvars();
    LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::term(1, 1);
    LaurentPoly prev = M.hilbert().numerator;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        PresentedModule next = quotient_by_forms(R, M, forms, static_cast<int>(k) + 1);
        LaurentPoly nq = next.hilbert().numerator - one_minus_t * prev;
        int cancelled = 0;
        while (!nq.is_zero() && cancelled < r && nq.eval_at_one() == 0) {
            nq = nq.divided_by_one_minus_t();
            ++cancelled;
        }
        if (!nq.is_zero() && cancelled < r) {
            if (failing_prefix)
                *failing_prefix = static_cast<int>(k) + 1;
            return false;
        }
        prev = next.hilbert().numerator;
    }
    return true;
}

}  // namespace

bool certify_generic(const Ring& R, const PresentedModule& M, const std::vector<Polynomial>& forms,
                     int* failing_prefix) {
    return certify_prefixes(R, M, forms, failing_prefix);
}

bool coinvariants_artinian(const Ring& R, const PresentedModule& N,
                           const std::vector<Polynomial>& forms) {
    if (N.is_zero())
        return true;
    PresentedModule Q = quotient_by_forms(R, N, forms, static_cast<int>(forms.size()));
    return Q.krull_dim() <= 0;
}

LinearSystem sample_generic_forms(const Ring& R, const PresentedModule& M,
                                  const std::vector<DeficiencyModule>& defs, int s, bool strong,
                                  std::uint64_t seed) {
    if (s < 1)
        throw std::invalid_argument("sample_generic_forms: s must be positive");
    const PrimeField& K = R.field();
    const int r = R.nvars();
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<std::uint32_t>(rng() % K.characteristic()); };

    const int max_attempts = 8;
    int last_failing_prefix = 0;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        LinearSystem L;
        L.seed = seed;
        L.strong = strong;
        L.attempts = attempt;
        for (int f = 0; f < s; ++f) {
            std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(r));
            bool nonzero = false;
            do {
                nonzero = false;
                for (int v = 0; v < r; ++v) {
                    coeffs[static_cast<std::size_t>(v)] = draw();
                    if (coeffs[static_cast<std::size_t>(v)] != 0)
                        nonzero = true;
                }
            } while (!nonzero);
            std::vector<Term> terms;
            for (int v = 0; v < r; ++v)
                if (coeffs[static_cast<std::size_t>(v)] != 0)
                    terms.push_back(Term{coeffs[static_cast<std::size_t>(v)], Monomial::variable(r, v)});
            L.forms.push_back(Polynomial::from_terms(K, std::move(terms)));
            L.coefficients.push_back(std::move(coeffs));
        }

        int failing = 0;
        bool ok = certify_prefixes(R, M, L.forms, &failing);
        if (ok && strong) {
            for (const DeficiencyModule& D : defs) {
                if (D.module.is_zero())
                    continue;
                if (!certify_prefixes(R, D.module, L.forms, &failing)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            L.certified = true;
            return L;
        }
        last_failing_prefix = failing;
    }
    throw sampling_error("sample_generic_forms: retry budget exhausted (prefix " +
                             std::to_string(last_failing_prefix) + " kept failing)",
                         last_failing_prefix);
}

LinearSystem sample_generic_forms(const Ring& R, const PresentedModule& M, int s, bool strong,
                                  std::uint64_t seed) {
    std::vector<DeficiencyModule> defs;
    if (strong)
        defs = deficiency_modules(R, M);
    return sample_generic_forms(R, M, defs, s, strong, seed);
}

LinearSystem explicit_linear_system(const Ring& R, const PresentedModule& M,
                                    const std::vector<DeficiencyModule>& defs,
                                    std::vector<Polynomial> forms, bool check_strong) {
    LinearSystem L;
    for (const Polynomial& f : forms) {
        if (f.is_zero() || !f.is_homogeneous() || *f.degree() != 1)
            throw std::invalid_argument("explicit_linear_system: forms must be linear");
        std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(R.nvars()), 0);
        for (const Term& t : f.terms())
            for (int v = 0; v < R.nvars(); ++v)
                if (t.mon.exps[static_cast<std::size_t>(v)] == 1)
                    coeffs[static_cast<std::size_t>(v)] = t.coeff;
        L.coefficients.push_back(std::move(coeffs));
    }
    L.forms = std::move(forms);
    L.strong = check_strong;
    bool ok = certify_prefixes(R, M, L.forms, nullptr);
    if (ok && check_strong)
        for (const DeficiencyModule& D : defs)
            if (!D.module.is_zero() && !certify_prefixes(R, D.module, L.forms, nullptr)) {
                ok = false;
                break;
            }
    L.certified = ok;
    return L;
}

GreenModule green_module(const Ring& R, const PresentedModule& M,
                         const std::vector<DeficiencyModule>& defs, const LinearSystem& L, int i,
                         int j, bool require_certificate) {
    if (require_certificate && !(L.certified && L.strong))
        throw contract_error("green_module: linear system lacks a strong genericity certificate");
    if (j < 0 || j > M.krull_dim())
        throw std::invalid_argument("green_module: j outside [0, dim M]");

    const PresentedModule* Kj = nullptr;
    for (const DeficiencyModule& D : defs)
        if (D.index == j)
            Kj = &D.module;
    if (!Kj)
        throw std::invalid_argument("green_module: deficiency module missing from list");

    const int s = static_cast<int>(L.forms.size());
    PresentedModule N = koszul_cohomology(R, L.forms, *Kj, i);

    bool finite = N.krull_dim() <= 0;
    if (!finite && L.certified && L.strong && (i < s || s >= j))
        throw falsification_error("green_module: finite length failed at (i=" + std::to_string(i) +
                                  ", j=" + std::to_string(j) + ") despite a certified system");
    FiniteHilbertFunction hf;
    if (finite)
        hf = dual_hilbert_function(N.hilbert().finite_hf());
    return GreenModule{i, j, std::move(N), std::move(hf)};
}

GreenTable green_table(const Ring& R, const PresentedModule& M,
                       const std::vector<DeficiencyModule>& defs, const LinearSystem& L,
                       int window_lo, int window_hi, bool require_certificate) {
    GreenTable T;
    T.forms = L;
    const int s = static_cast<int>(L.forms.size());
    const int d = M.krull_dim();
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= d; ++j) {
            GreenModule G = green_module(R, M, defs, L, i, j, require_certificate);
            if (G.dual_rep.krull_dim() > 0)
                continue;  // only reachable for uncertified systems
            if (!G.hf.is_zero()) {
                if (*G.hf.min_degree() <= window_lo || *G.hf.max_degree() >= window_hi)
                    throw std::logic_error("green_table: support touches the window fringe");
                T.entries[{i, j}] = G.hf;
            }
        }
    return T;
}

std::pair<int, int> default_window(const Ring& R, const PresentedModule& M) {
    FreeResolution res = minimal_free_resolution(R, M);
    BettiTable B = betti_table(res);
    int reg = B.entries.empty() ? 0 : B.regularity();
    return {-reg - R.nvars() - 2, reg + 2};
}

}  // namespace grmod
