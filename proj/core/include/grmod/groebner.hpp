#pragma once

#include <vector>

#include "grmod/free_module.hpp"

namespace grmod {

/* Gröbner basis of a graded submodule of a twisted free module, under the
 * position-over-term extension of degrevlex with twist-adjusted degrees
 * (see module_term_cmp). `reduced` means monic leading coefficients, no
 * leading term dividing another, and fully tail-reduced. */
struct GBasis {
    FreeModule ambient;
    std::vector<ModuleElement> gens;
    bool reduced = false;
};

struct DivisionResult {
    ModuleElement remainder;
    std::vector<Polynomial> quotients;  // one ring element per divisor
};

/* Full multivariate division: f = sum quotients[k] * divisors[k] + remainder,
 * no term of the remainder divisible by any divisor's leading term. */
DivisionResult divide(const Ring& R, const FreeModule& ambient,
                      const std::vector<ModuleElement>& divisors, ModuleElement f);

/* Buchberger's algorithm with the normal selection strategy (lowest S-pair
 * degree first, first-come within a degree). Homogeneous input gives a
 * degree-by-degree completion and deterministic output. */
GBasis buchberger(const Ring& R, const FreeModule& ambient, std::vector<ModuleElement> gens);

/* Same, additionally expressing each basis element in terms of the input
 * sequence: gb.gens[k] = sum_j exprs[k][j] * input[j], with exprs[k] living
 * in the free module on the inputs. */
struct TrackedGB {
    GBasis gb;
    std::vector<ModuleElement> exprs;
    FreeModule input_free;
};
TrackedGB buchberger_tracked(const Ring& R, const FreeModule& ambient,
                             const std::vector<ModuleElement>& gens,
                             const std::vector<int>& input_degs);

ModuleElement normal_form(const Ring& R, const GBasis& G, const ModuleElement& f);

/* every S-pair reduces to zero */
bool buchberger_criterion_holds(const Ring& R, const GBasis& G);

/* Schreyer syzygies of a Gröbner basis: generators of the kernel of
 * free(deg G) -> ambient, e_k -> G.gens[k]. Every same-position S-pair
 * contributes; none may be skipped or the result can fail to generate. */
std::vector<ModuleElement> syzygies_of_gb(const Ring& R, const GBasis& G);

/* Kernel generators for an arbitrary homogeneous sequence (not necessarily a
 * Gröbner basis): elements s of free(src_degs) with sum s_j * seq[j] = 0.
 * Zero entries in seq are allowed; their unit vectors appear in the result. */
std::vector<ModuleElement> sequence_kernel(const Ring& R, const FreeModule& ambient,
                                           const std::vector<ModuleElement>& seq,
                                           const std::vector<int>& src_degs);

}  // namespace grmod
