#pragma once

#include <optional>
#include <vector>

#include "grmod/polynomial.hpp"

namespace grmod {

/* Twisted graded free module ⊕_k R(-a_k); gen_degs holds the a_k, i.e. the
 * degrees of the free generators. */
struct FreeModule {
    std::vector<int> gen_degs;

    int rank() const noexcept { return static_cast<int>(gen_degs.size()); }
    int gen_deg(int i) const { return gen_degs.at(static_cast<std::size_t>(i)); }

    FreeModule twisted(int k) const {
        FreeModule f = *this;
        for (int& d : f.gen_degs)
            d += k;
        return f;
    }

    bool operator==(const FreeModule& o) const noexcept { return gen_degs == o.gen_degs; }
};

/* Element of a free module: one polynomial per generator. */
struct ModuleElement {
    std::vector<Polynomial> comps;

    static ModuleElement zero(int rank) {
        return ModuleElement{std::vector<Polynomial>(static_cast<std::size_t>(rank))};
    }

    static ModuleElement unit(int rank, int pos, const Polynomial& f) {
        ModuleElement e = zero(rank);
        e.comps[static_cast<std::size_t>(pos)] = f;
        return e;
    }

    int rank() const noexcept { return static_cast<int>(comps.size()); }

    bool is_zero() const {
        for (const Polynomial& f : comps)
            if (!f.is_zero())
                return false;
        return true;
    }

    bool operator==(const ModuleElement& o) const { return comps == o.comps; }
};

struct ModTerm {
    int pos = -1;
    std::uint32_t coeff = 0;
    Monomial mon;
};

/* Order on module terms: twist-adjusted degree first, then position over
 * term (earlier generator wins), then degrevlex. */
int module_term_cmp(const FreeModule& F, int pos_a, const Monomial& a, int pos_b, const Monomial& b);

/* largest term under module_term_cmp; nullopt for zero */
std::optional<ModTerm> leading_term(const FreeModule& F, const ModuleElement& v);

/* degree of a homogeneous element (deg comp_i + gen_deg_i); nullopt if zero */
std::optional<int> element_degree(const FreeModule& F, const ModuleElement& v);
bool element_is_homogeneous(const FreeModule& F, const ModuleElement& v);

ModuleElement elem_add(const PrimeField& K, const ModuleElement& a, const ModuleElement& b);
ModuleElement elem_sub(const PrimeField& K, const ModuleElement& a, const ModuleElement& b);
ModuleElement elem_scalar_mul(const PrimeField& K, std::uint32_t c, const ModuleElement& a);
ModuleElement elem_term_mul(const PrimeField& K, const ModuleElement& a, std::uint32_t c, const Monomial& m);
ModuleElement elem_poly_mul(const PrimeField& K, const Polynomial& f, const ModuleElement& a);

/* Graded matrix between twisted free modules; rows indexed by target
 * generators, columns by source generators. Entry (i,j) is homogeneous of
 * degree src_degs[j] - tgt_degs[i] (or zero), so the map itself is
 * homogeneous of degree zero. */
struct GradedMatrix {
    std::vector<int> src_degs;
    std::vector<int> tgt_degs;
    std::vector<std::vector<Polynomial>> entries;  // tgt_rank x src_rank

    static GradedMatrix zero(std::vector<int> tgt, std::vector<int> src);
    static GradedMatrix from_columns(std::vector<int> tgt, const std::vector<int>& src,
                                     const std::vector<ModuleElement>& cols);

    int rows() const noexcept { return static_cast<int>(tgt_degs.size()); }
    int cols() const noexcept { return static_cast<int>(src_degs.size()); }

    const Polynomial& at(int i, int j) const {
        return entries.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }
    Polynomial& at(int i, int j) {
        return entries.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }

    FreeModule source() const { return FreeModule{src_degs}; }
    FreeModule target() const { return FreeModule{tgt_degs}; }

    ModuleElement column(int j) const;
    std::vector<ModuleElement> columns() const;

    GradedMatrix transposed() const;

    /* degrees shifted by k on both sides; same entries */
    GradedMatrix twisted(int k) const;

    /* true when every entry is homogeneous of degree src[j]-tgt[i] or zero */
    bool is_degree_zero_map() const;

    bool is_zero() const;
};

ModuleElement matrix_apply(const PrimeField& K, const GradedMatrix& A, const ModuleElement& v);
GradedMatrix matrix_multiply(const PrimeField& K, const GradedMatrix& A, const GradedMatrix& B);
/* columns of A followed by columns of B (same target) */
GradedMatrix matrix_concat_cols(const GradedMatrix& A, const GradedMatrix& B);

}  // namespace grmod
