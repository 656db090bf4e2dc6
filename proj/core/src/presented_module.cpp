#include "grmod/presented_module.hpp"

#include <stdexcept>

#include "grmod/errors.hpp"
#include "grmod/linalg.hpp"

namespace grmod {

PresentedModule::PresentedModule(Ring ring, FreeModule generators, GradedMatrix relations)
    : ring_(std::move(ring)), gens_(std::move(generators)), rel_(std::move(relations)),
      relgb_{gens_, {}, true} {
    if (rel_.tgt_degs != gens_.gen_degs)
        throw std::invalid_argument("PresentedModule: relation target mismatch");
    if (!rel_.is_degree_zero_map())
        throw std::invalid_argument("PresentedModule: relations are not homogeneous of degree zero");
    relgb_ = buchberger(ring_, gens_, rel_.columns());
    hilbert_ = hilbert_data(ring_, relgb_);
}

PresentedModule PresentedModule::free_module(const Ring& ring, FreeModule generators) {
    GradedMatrix none = GradedMatrix::zero(generators.gen_degs, {});
    return PresentedModule(ring, std::move(generators), std::move(none));
}

PresentedModule PresentedModule::quotient_ring(const Ring& ring,
                                               const std::vector<Polynomial>& ideal_gens) {
    std::vector<int> src;
    std::vector<ModuleElement> cols;
    for (const Polynomial& f : ideal_gens) {
        if (f.is_zero())
            continue;
        if (!f.is_homogeneous())
            throw std::invalid_argument("quotient_ring: inhomogeneous ideal generator");
        src.push_back(*f.degree());
        cols.push_back(ModuleElement{{f}});
    }
    GradedMatrix rel = GradedMatrix::from_columns({0}, src, cols);
    return PresentedModule(ring, FreeModule{{0}}, std::move(rel));
}

bool PresentedModule::is_zero() const { return hilbert_.is_zero_module(); }

PresentedModule PresentedModule::twisted(int k) const {
    FreeModule g = gens_.twisted(k);
    return PresentedModule(ring_, std::move(g), rel_.twisted(k));
}

PresentedModule kernel(const Ring& R, const GradedMatrix& phi) {
    std::vector<ModuleElement> ker =
        sequence_kernel(R, phi.target(), phi.columns(), phi.src_degs);
    std::vector<int> ker_degs;
    std::vector<ModuleElement> ker_elems;
    for (const ModuleElement& v : ker) {
        auto d = element_degree(phi.source(), v);
        if (!d)
            continue;
        ker_degs.push_back(*d);
        ker_elems.push_back(v);
    }
    /* relations among the kernel generators = second syzygies */
    std::vector<ModuleElement> rels =
        sequence_kernel(R, phi.source(), ker_elems, ker_degs);
    std::vector<int> rel_degs;
    std::vector<ModuleElement> rel_elems;
    FreeModule ker_free{ker_degs};
    for (const ModuleElement& v : rels) {
        auto d = element_degree(ker_free, v);
        if (!d)
            continue;
        rel_degs.push_back(*d);
        rel_elems.push_back(v);
    }
    GradedMatrix rel = GradedMatrix::from_columns(ker_degs, rel_degs, rel_elems);
    return PresentedModule(R, ker_free, std::move(rel));
}

namespace {

/* generators of { x in F : Ax in span(B cols) }, i.e. the preimage of a
 * submodule under a free-module map. */
std::vector<ModuleElement> preimage_generators(const Ring& R, const GradedMatrix& A,
                                               const GradedMatrix& B) {
    GradedMatrix aug = matrix_concat_cols(A, B);
    std::vector<ModuleElement> ker = sequence_kernel(R, aug.target(), aug.columns(), aug.src_degs);
    std::vector<ModuleElement> out;
    const int n = A.cols();
    for (const ModuleElement& v : ker) {
        ModuleElement x = ModuleElement::zero(n);
        for (int j = 0; j < n; ++j)
            x.comps[static_cast<std::size_t>(j)] = v.comps[static_cast<std::size_t>(j)];
        if (!x.is_zero())
            out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

PresentedModule homology_at(const Ring& R, const GradedMatrix& d2, const GradedMatrix& d1,
                            const GradedMatrix& rho_X, const GradedMatrix& rho_Y) {
    const PrimeField& K = R.field();
    if (d1.src_degs != rho_X.tgt_degs || (d2.cols() > 0 && d2.tgt_degs != rho_X.tgt_degs))
        throw std::invalid_argument("homology_at: inconsistent shapes");

    /* contract: d1 . d2 = 0 modulo the relations of Y */
    if (d2.cols() > 0) {
        GradedMatrix comp = matrix_multiply(K, d1, d2);
        GBasis rels_y = buchberger(R, d1.target(), rho_Y.columns());
        for (int j = 0; j < comp.cols(); ++j)
            if (!normal_form(R, rels_y, comp.column(j)).is_zero())
                throw contract_error("homology_at: d1 . d2 is nonzero on presented modules");
    }

    /* cycles: preimage of im(rho_Y) under d1 */
    std::vector<ModuleElement> cycles;
    if (d1.rows() == 0) {
        /* map to the zero module: everything is a cycle */
        for (int j = 0; j < d1.cols(); ++j)
            cycles.push_back(ModuleElement::unit(d1.cols(), j, Polynomial::constant(K, R.nvars(), 1)));
    } else {
        cycles = preimage_generators(R, d1, rho_Y);
    }

    std::vector<int> cyc_degs;
    std::vector<ModuleElement> cyc_elems;
    FreeModule X = d1.source();
    for (const ModuleElement& v : cycles) {
        auto d = element_degree(X, v);
        if (!d)
            continue;
        cyc_degs.push_back(*d);
        cyc_elems.push_back(v);
    }

    /* boundaries: columns of d2 together with the relations of X */
    GradedMatrix bound = matrix_concat_cols(d2.cols() > 0 ? d2 : GradedMatrix::zero(X.gen_degs, {}),
                                            rho_X);

    /* relations of the homology: preimage of the boundary span under
     * (free on cycles) -> X */
    GradedMatrix cyc_matrix = GradedMatrix::from_columns(X.gen_degs, cyc_degs, cyc_elems);
    std::vector<ModuleElement> rel_gens = preimage_generators(R, cyc_matrix, bound);

    std::vector<int> rel_degs;
    std::vector<ModuleElement> rel_elems;
    FreeModule H_free{cyc_degs};
    for (const ModuleElement& v : rel_gens) {
        auto d = element_degree(H_free, v);
        if (!d)
            continue;
        rel_degs.push_back(*d);
        rel_elems.push_back(v);
    }
    GradedMatrix rel = GradedMatrix::from_columns(cyc_degs, rel_degs, rel_elems);
    return PresentedModule(R, H_free, std::move(rel));
}

PresentedModule homology_at(const Ring& R, const GradedMatrix& d2, const GradedMatrix& d1) {
    GradedMatrix rho_x = GradedMatrix::zero(d1.src_degs, {});
    GradedMatrix rho_y = GradedMatrix::zero(d1.tgt_degs, {});
    return homology_at(R, d2, d1, rho_x, rho_y);
}

PresentedModule minimalize(const PresentedModule& M) {
    const Ring& R = M.ring();
    const PrimeField& K = R.field();
    std::vector<int> gdegs = M.generators().gen_degs;
    GradedMatrix W = M.relations();

    while (true) {
        int up = -1, uq = -1;
        for (int i = 0; i < W.rows() && up < 0; ++i)
            for (int j = 0; j < W.cols(); ++j)
                if (W.at(i, j).is_unit_constant()) {
                    up = i;
                    uq = j;
                    break;
                }
        if (up < 0)
            break;

        std::uint32_t u = W.at(up, uq).leading_term().coeff;
        std::uint32_t uinv = K.inv(u);
        /* clear the pivot row in the other columns so no relation mentions
         * generator `up` any more */
        for (int j = 0; j < W.cols(); ++j) {
            if (j == uq || W.at(up, j).is_zero())
                continue;
            Polynomial factor = poly_scalar_mul(K, uinv, W.at(up, j));
            for (int i = 0; i < W.rows(); ++i)
                W.at(i, j) = poly_sub(K, W.at(i, j), poly_mul(K, factor, W.at(i, uq)));
        }
        /* delete generator `up` and relation `uq` */
        GradedMatrix next = GradedMatrix::zero({}, {});
        for (int i = 0; i < W.rows(); ++i)
            if (i != up)
                next.tgt_degs.push_back(W.tgt_degs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < W.cols(); ++j)
            if (j != uq)
                next.src_degs.push_back(W.src_degs[static_cast<std::size_t>(j)]);
        next.entries.assign(next.tgt_degs.size(), std::vector<Polynomial>(next.src_degs.size()));
        int ii = 0;
        for (int i = 0; i < W.rows(); ++i) {
            if (i == up)
                continue;
            int jj = 0;
            for (int j = 0; j < W.cols(); ++j) {
                if (j == uq)
                    continue;
                next.at(ii, jj) = W.at(i, j);
                ++jj;
            }
            ++ii;
        }
        W = std::move(next);
        gdegs.erase(gdegs.begin() + up);
    }

    /* drop zero relation columns */
    GradedMatrix cleaned = GradedMatrix::zero(gdegs, {});
    for (int j = 0; j < W.cols(); ++j) {
        ModuleElement col = W.column(j);
        if (col.is_zero())
            continue;
        cleaned.src_degs.push_back(W.src_degs[static_cast<std::size_t>(j)]);
        for (int i = 0; i < cleaned.rows(); ++i)
            cleaned.entries[static_cast<std::size_t>(i)].push_back(col.comps[static_cast<std::size_t>(i)]);
    }
    return PresentedModule(R, FreeModule{gdegs}, std::move(cleaned));
}

ModuleInvariants module_invariants(const PresentedModule& M) {
    ModuleInvariants inv;
    PresentedModule min = minimalize(M);
    inv.mu = min.generators().rank();
    inv.minimal_gen_degrees = min.generators().gen_degs;
    inv.krull_dim = M.krull_dim();
    inv.multiplicity = M.hilbert().multiplicity;
    inv.submodule_initial_degree = M.hilbert().submodule_initial_degree;
    inv.module_initial_degree = M.hilbert().module_initial_degree();
    if (inv.krull_dim <= 0)
        inv.finite_hf = M.hilbert().finite_hf();
    return inv;
}

GradedPieceBasis graded_piece_basis(const PresentedModule& M, int degree) {
    GradedPieceBasis basis;
    const int nv = M.ring().nvars();

    /* leading terms of the relation Gröbner basis, by position */
    std::vector<std::vector<Monomial>> lt(static_cast<std::size_t>(M.generators().rank()));
    for (const ModuleElement& g : M.relations_gb().gens) {
        ModTerm t = *leading_term(M.generators(), g);
        lt[static_cast<std::size_t>(t.pos)].push_back(t.mon);
    }

    /* standard monomials of the right adjusted degree */
    for (int pos = 0; pos < M.generators().rank(); ++pos) {
        int d = degree - M.generators().gen_deg(pos);
        if (d < 0)
            continue;
        std::vector<int> exps(static_cast<std::size_t>(nv), 0);
        /* enumerate monomials of degree d in nv variables, lexicographically */
        auto emit = [&](auto&& self, int var, int remaining) -> void {
            if (var == nv - 1) {
                exps[static_cast<std::size_t>(var)] = remaining;
                Monomial m = Monomial::of(exps);
                bool standard = true;
                for (const Monomial& l : lt[static_cast<std::size_t>(pos)])
                    if (mono_divides(l, m)) {
                        standard = false;
                        break;
                    }
                if (standard)
                    basis.monomials.emplace_back(pos, std::move(m));
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                exps[static_cast<std::size_t>(var)] = e;
                self(self, var + 1, remaining - e);
            }
            exps[static_cast<std::size_t>(var)] = 0;
        };
        emit(emit, 0, d);
    }
    return basis;
}

long long socle_dimension(const PresentedModule& M, int window_lo, int window_hi) {
    const Ring& R = M.ring();
    const PrimeField& K = R.field();
    long long socle = 0;

    for (int n = window_lo; n <= window_hi; ++n) {
        GradedPieceBasis Bn = graded_piece_basis(M, n);
        if (Bn.monomials.empty())
            continue;
        GradedPieceBasis Bn1 = graded_piece_basis(M, n + 1);

        /* index of the degree-(n+1) standard monomials */
        auto index_of = [&](int pos, const Monomial& m) -> int {
            for (std::size_t k = 0; k < Bn1.monomials.size(); ++k)
                if (Bn1.monomials[k].first == pos && Bn1.monomials[k].second == m)
                    return static_cast<int>(k);
            return -1;
        };

        /* stacked multiplication maps M_n -> M_{n+1}^r */
        FpMatrix A(static_cast<int>(Bn1.monomials.size()) * R.nvars(),
                   static_cast<int>(Bn.monomials.size()));
        for (std::size_t col = 0; col < Bn.monomials.size(); ++col) {
            const auto& [pos, m] = Bn.monomials[col];
            for (int v = 0; v < R.nvars(); ++v) {
                Monomial xm = mono_mul(m, Monomial::variable(R.nvars(), v));
                ModuleElement e = ModuleElement::unit(M.generators().rank(), pos,
                                                      Polynomial::monomial_term(1, xm));
                ModuleElement nf = normal_form(R, M.relations_gb(), e);
                for (int ppos = 0; ppos < nf.rank(); ++ppos)
                    for (const Term& t : nf.comps[static_cast<std::size_t>(ppos)].terms()) {
                        int row = index_of(ppos, t.mon);
                        if (row < 0)
                            throw std::logic_error("socle_dimension: normal form left the standard basis");
                        A.at(v * static_cast<int>(Bn1.monomials.size()) + row, static_cast<int>(col)) =
                            K.add(A.at(v * static_cast<int>(Bn1.monomials.size()) + row,
                                       static_cast<int>(col)),
                                  t.coeff);
                    }
            }
        }
        socle += static_cast<int>(Bn.monomials.size()) - A.rank(K);
    }
    return socle;
}

long long socle_dimension(const PresentedModule& M) {
    if (M.is_zero())
        return 0;
    if (M.krull_dim() > 0)
        throw std::invalid_argument("socle_dimension: window required for positive-dimensional modules");
    FiniteHilbertFunction f = M.hilbert().finite_hf();
    return socle_dimension(M, *f.min_degree(), *f.max_degree());
}

}  // namespace grmod
