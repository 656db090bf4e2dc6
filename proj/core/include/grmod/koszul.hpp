#pragma once

#include "grmod/betti.hpp"
#include "grmod/presented_module.hpp"

namespace grmod {

/* Koszul complex of a sequence of homogeneous forms on a presented module:
 * term i is the twisted free module on (i-subset, generator) pairs with
 * subset-sum twists, presented modulo one copy of M's relations per subset.
 * Subsets are ordered by colex index; the differential is
 *   d(e_S (x) m) = sum_k (-1)^{index of k in S} f_k e_{S\k} (x) m.
 */
struct KoszulComplex {
    std::vector<Polynomial> forms;
    std::vector<FreeModule> terms;          // 0..s
    std::vector<GradedMatrix> diffs;        // diffs[i]: K_i -> K_{i-1}, i = 1..s
    std::vector<GradedMatrix> term_relations;
};

KoszulComplex koszul_complex(const Ring& R, const std::vector<Polynomial>& forms,
                             const PresentedModule& M);

/* H_i(f; M); the zero module outside 0 <= i <= s, and M itself for an empty
 * form sequence at i = 0. */
PresentedModule koszul_homology(const Ring& R, const std::vector<Polynomial>& forms,
                                const PresentedModule& M, int i);

/* H^i(f; M) = H^i(Hom(K_.(f;R), M)); for linear forms it satisfies
 * dim H^{s-j}(f;M)_{n-s} = dim H_j(f;M)_n. */
PresentedModule koszul_cohomology(const Ring& R, const std::vector<Polynomial>& forms,
                                  const PresentedModule& M, int i);

/* dim H_i(m; M)_j = dim Tor_i(K, M)_j over the window, computed through the
 * Gröbner-side Koszul homology on the full variable sequence. This is the
 * slow-but-separate route to graded Betti numbers used to cross-check
 * minimal resolutions. */
BettiTable tor_dimensions(const Ring& R, const PresentedModule& M, int window_lo, int window_hi);

}  // namespace grmod
