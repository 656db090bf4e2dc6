#pragma once

#include "grmod/betti.hpp"
#include "grmod/free_module.hpp"

#include <map>

namespace grmod {
namespace oracle {

/* Dense degreewise rank arithmetic on explicit monomial bases. This is the
 * verification oracle: it shares scalar arithmetic and the plain data types
 * with the rest of the library but none of the Gröbner machinery -- no
 * normal forms, no bases, no Hilbert series. Everything here is elementary
 * row reduction on graded pieces.
 *
 * A module is passed as raw presentation data (generator degrees plus the
 * relation matrix); the relation Gröbner basis cached inside PresentedModule
 * is deliberately not accepted. */

/* dim (F/N)_n for n in [lo, hi] */
std::map<int, long long> module_dims(const Ring& R, const FreeModule& gens, const GradedMatrix& rel,
                                     int lo, int hi);

/* dim H_spot(forms; F/N)_n for n in [lo, hi] */
std::map<int, long long> koszul_homology_dims(const Ring& R, const std::vector<Polynomial>& forms,
                                              const FreeModule& gens, const GradedMatrix& rel,
                                              int spot, int lo, int hi);

/* dim Tor_i(K, F/N)_j for 0 <= i <= r and j in [lo, hi] (Koszul complex on
 * the full variable sequence) */
BettiTable tor_dims(const Ring& R, const FreeModule& gens, const GradedMatrix& rel, int lo, int hi);

}  // namespace oracle
}  // namespace grmod
