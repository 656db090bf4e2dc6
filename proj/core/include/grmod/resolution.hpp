#pragma once

#include "grmod/betti.hpp"
#include "grmod/koszul.hpp"
#include "grmod/presented_module.hpp"

namespace grmod {

/* Graded free resolution F_len -> ... -> F_1 -> F_0 (-> M -> 0).
 * diffs[i-1] is d_i : F_i -> F_{i-1}. When minimal, no differential carries
 * a unit entry and the generator degrees of F_i read off the Betti numbers. */
struct FreeResolution {
    std::vector<FreeModule> frees;
    std::vector<GradedMatrix> diffs;
    bool minimal = false;

    int length() const noexcept { return static_cast<int>(diffs.size()); }
};

/* Iterated syzygies (Schreyer) followed by unit elimination. Length is at
 * most the number of variables (Hilbert's syzygy theorem; asserted). */
FreeResolution minimal_free_resolution(const Ring& R, const PresentedModule& M);

BettiTable betti_table(const FreeResolution& F);

enum class RegularityMode { betti_full, betti_tail, cohomological };

/* betti_full: max { e(Tor_i) - i }.
 * betti_tail(s): the same max restricted to r - s <= i <= r. */
int regularity_from_resolution(const Ring& R, const FreeResolution& F);
int regularity_betti_tail(const Ring& R, const FreeResolution& F, int s);

struct DepthCodim {
    int depth = 0;
    int dim = 0;
    int codim = 0;
    bool cohen_macaulay = false;
};

/* dim from the Hilbert series, depth = r - pd (Auslander-Buchsbaum),
 * codim = r - dim. Throws for the zero module. */
DepthCodim depth_and_codim(const Ring& R, const PresentedModule& M);
DepthCodim depth_and_codim(const Ring& R, const PresentedModule& M, const FreeResolution& F);

}  // namespace grmod
