#pragma once

#include "grmod/hilbert.hpp"

namespace grmod {

/* Finitely generated graded module presented as the cokernel of a graded
 * matrix into a twisted free module. Everything in the system -- quotient
 * rings, kernels, homology, Ext modules, Koszul homology -- is carried in
 * this one shape. The Gröbner basis of the relation columns is computed at
 * construction and never mutated afterwards, so values are safe to share
 * across threads. */
class PresentedModule {
  public:
    PresentedModule(Ring ring, FreeModule generators, GradedMatrix relations);

    static PresentedModule free_module(const Ring& ring, FreeModule generators);
    /* R itself, or R/I for an ideal given by generators */
    static PresentedModule quotient_ring(const Ring& ring, const std::vector<Polynomial>& ideal_gens);

    const Ring& ring() const noexcept { return ring_; }
    const FreeModule& generators() const noexcept { return gens_; }
    const GradedMatrix& relations() const noexcept { return rel_; }
    const GBasis& relations_gb() const noexcept { return relgb_; }
    const HilbertData& hilbert() const noexcept { return hilbert_; }

    bool is_zero() const;
    int krull_dim() const noexcept { return hilbert_.krull_dim; }
    long long dim_at(int degree) const { return hilbert_.hf(degree); }

    PresentedModule twisted(int k) const;

  private:
    Ring ring_;
    FreeModule gens_;
    GradedMatrix rel_;
    GBasis relgb_;
    HilbertData hilbert_;
};

/* Kernel of a map between free modules, presented by generators that map
 * onto ker(phi) inside the source free module. */
PresentedModule kernel(const Ring& R, const GradedMatrix& phi);

/* Homology ker(d1)/im(d2) at the middle of
 *
 *     . --d2--> X --d1--> Y
 *
 * where X and Y are presented modules with relation matrices rho_X, rho_Y
 * (possibly with zero columns for free modules) and d1, d2 are matrices
 * between the underlying free modules inducing the maps. Throws
 * contract_error when d1 . d2 is nonzero as a map of presented modules. */
PresentedModule homology_at(const Ring& R, const GradedMatrix& d2, const GradedMatrix& d1,
                            const GradedMatrix& rho_X, const GradedMatrix& rho_Y);

/* free-to-free convenience: no relations on either side */
PresentedModule homology_at(const Ring& R, const GradedMatrix& d2, const GradedMatrix& d1);

/* Presentation with no unit entries left in the relation matrix: generators
 * hit by degree-zero relation entries are eliminated. The number of
 * generators of the result is mu(M). */
PresentedModule minimalize(const PresentedModule& M);

struct ModuleInvariants {
    int krull_dim = -1;
    long long multiplicity = 0;
    int mu = 0;
    std::vector<int> minimal_gen_degrees;
    std::optional<int> submodule_initial_degree;  // a(N) of the relation submodule
    std::optional<int> module_initial_degree;     // a(M), smallest nonzero degree
    std::optional<FiniteHilbertFunction> finite_hf;  // set when krull_dim <= 0
};

/* mu, dimension, multiplicity and Hilbert data; depth is deliberately not
 * here -- it comes from the minimal free resolution. */
ModuleInvariants module_invariants(const PresentedModule& M);

/* dim_K (0 :_M m), summed over the finite window where the socle can live.
 * Without an explicit window the module must have finite length. */
long long socle_dimension(const PresentedModule& M);
long long socle_dimension(const PresentedModule& M, int window_lo, int window_hi);

/* graded pieces as explicit standard-monomial bases (for degreewise maps) */
struct GradedPieceBasis {
    std::vector<std::pair<int, Monomial>> monomials;  // (position, monomial)
};
GradedPieceBasis graded_piece_basis(const PresentedModule& M, int degree);

}  // namespace grmod
