#pragma once

#include <cstdint>

#include "grmod/resolution.hpp"

namespace grmod {

/* K^i_M = Ext^{r-i}(M, R(-r)), the i-th module of deficiency. Its graded
 * dual is the local cohomology H_m^i(M), which is never materialized
 * directly: every question about H_m^i is answered through K^i and the
 * degree flip dim H_m^i(M)_n = dim (K^i_M)_{-n}. */
struct DeficiencyModule {
    int index = 0;
    PresentedModule module;
};

/* K^i_M for i = 0..dim M, via the dualized minimal free resolution. The
 * dimension bounds dim K^i <= i (i < d) and dim K^d = d are asserted. */
std::vector<DeficiencyModule> deficiency_modules(const Ring& R, const PresentedModule& M);

/* Hilbert function of H_m^i(M) on a finite degree window. */
std::map<int, long long> local_cohomology_hf(const Ring& R, const std::vector<DeficiencyModule>& defs,
                                             int i, int window_lo, int window_hi);

/* e(H_m^i(M)) = -a(K^i_M); nullopt when the module vanishes */
std::optional<int> local_cohomology_end(const std::vector<DeficiencyModule>& defs, int i);

/* max { e(H_m^i) + i }; agrees with the Betti-side regularity */
int regularity_cohomological(const Ring& R, const PresentedModule& M);

/* Linear system of forms together with its genericity certificates: the
 * prefix colon quotients ((l_1..l_{k-1})M : l_k)/(l_1..l_{k-1})M must have
 * finite length, for M itself (generic) and for every K^i_M (strongly
 * generic). */
struct LinearSystem {
    std::vector<Polynomial> forms;
    std::vector<std::vector<std::uint32_t>> coefficients;  // per form, per variable
    bool certified = false;
    bool strong = false;
    std::uint64_t seed = 0;
    int attempts = 0;
};

/* true iff every prefix colon quotient on M has finite length; on failure
 * failing_prefix (1-based) reports the first bad prefix */
bool certify_generic(const Ring& R, const PresentedModule& M,
                     const std::vector<Polynomial>& forms, int* failing_prefix = nullptr);

/* dim N/(l_1..l_s)N <= 0, decided on the Hilbert series. Koszul (co)homology
 * of the system on N is killed by (l) + Ann N, so this single check forces
 * every H_i(l; N) and H^i(l; N) -- and hence every Green module over N -- to
 * have finite length. */
bool coinvariants_artinian(const Ring& R, const PresentedModule& N,
                           const std::vector<Polynomial>& forms);

/* Sample forms with uniformly random coefficients until the certificate
 * holds (at most 8 resamples, then sampling_error). Deterministic for a
 * fixed seed. */
LinearSystem sample_generic_forms(const Ring& R, const PresentedModule& M, int s, bool strong,
                                  std::uint64_t seed);
LinearSystem sample_generic_forms(const Ring& R, const PresentedModule& M,
                                  const std::vector<DeficiencyModule>& defs, int s, bool strong,
                                  std::uint64_t seed);

/* wrap explicitly given forms (e.g. the variables themselves); certificates
 * are recorded but not required */
LinearSystem explicit_linear_system(const Ring& R, const PresentedModule& M,
                                    const std::vector<DeficiencyModule>& defs,
                                    std::vector<Polynomial> forms, bool check_strong);

/* Green module H_i(l; H_m^j(M)), held through its dual representative
 * N = H^i(l; K^j_M): the Green module's Hilbert function is the degree flip
 * of N's, mu(Green) = socle(N) and socle(Green) = mu(N). */
struct GreenModule {
    int i = 0, j = 0;
    PresentedModule dual_rep;
    FiniteHilbertFunction hf;  // of the Green module itself
};

/* Throws contract_error when L lacks the required certificate (unless
 * require_certificate is false), and falsification_error when the
 * finite-length conclusion fails while its hypotheses hold. */
GreenModule green_module(const Ring& R, const PresentedModule& M,
                         const std::vector<DeficiencyModule>& defs, const LinearSystem& L, int i,
                         int j, bool require_certificate = true);

struct GreenTable {
    std::map<std::pair<int, int>, FiniteHilbertFunction> entries;  // (i,j), finite-length cells
    LinearSystem forms;
};

/* All cells 0 <= i <= s, 0 <= j <= dim M. Support must stay strictly inside
 * the window (guard against truncation). */
GreenTable green_table(const Ring& R, const PresentedModule& M,
                       const std::vector<DeficiencyModule>& defs, const LinearSystem& L,
                       int window_lo, int window_hi, bool require_certificate = true);

/* spec default window [-reg - r - 2, reg + 2] */
std::pair<int, int> default_window(const Ring& R, const PresentedModule& M);

}  // namespace grmod
