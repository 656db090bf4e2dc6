#include "grmod/resolution.hpp"

#include <stdexcept>

#include "grmod/errors.hpp"

namespace grmod {

namespace {

/* Eliminate one unit entry of diffs[i] at (p,q), adjusting the neighbours so
 * all composites stay zero, then delete generator q of F_{i+1}... (see the
 * basis-change bookkeeping inline). Indices: diffs[k] = d_{k+1}: F_{k+1} -> F_k. */
void eliminate_unit(const Ring& R, std::vector<FreeModule>& frees,
                    std::vector<GradedMatrix>& diffs, std::size_t k, int p, int q) {
    const PrimeField& K = R.field();
    GradedMatrix& D = diffs[k];
    std::uint32_t u = D.at(p, q).leading_term().coeff;
    std::uint32_t uinv = K.inv(u);

    /* column ops: clear row p outside column q; source-basis change of
     * F_{k+1} propagates to the rows of d_{k+2} */
    std::vector<Polynomial> lambda(static_cast<std::size_t>(D.cols()));
    for (int c = 0; c < D.cols(); ++c) {
        if (c == q || D.at(p, c).is_zero())
            continue;
        lambda[static_cast<std::size_t>(c)] = poly_scalar_mul(K, uinv, D.at(p, c));
        for (int i = 0; i < D.rows(); ++i)
            D.at(i, c) = poly_sub(K, D.at(i, c),
                                  poly_mul(K, lambda[static_cast<std::size_t>(c)], D.at(i, q)));
    }
    if (k + 1 < diffs.size()) {
        GradedMatrix& up_ = diffs[k + 1];
        for (int j = 0; j < up_.cols(); ++j) {
            Polynomial acc = up_.at(q, j);
            for (int c = 0; c < D.cols(); ++c) {
                if (c == q || lambda[static_cast<std::size_t>(c)].is_zero() || up_.at(c, j).is_zero())
                    continue;
                acc = poly_add(K, acc, poly_mul(K, lambda[static_cast<std::size_t>(c)], up_.at(c, j)));
            }
            up_.at(q, j) = std::move(acc);
        }
    }

    /* row ops: clear column q outside row p; target-basis change of F_k
     * propagates to the columns of d_k */
    std::vector<Polynomial> mu(static_cast<std::size_t>(D.rows()));
    for (int s = 0; s < D.rows(); ++s) {
        if (s == p || D.at(s, q).is_zero())
            continue;
        mu[static_cast<std::size_t>(s)] = poly_scalar_mul(K, uinv, D.at(s, q));
        for (int j = 0; j < D.cols(); ++j)
            D.at(s, j) = poly_sub(K, D.at(s, j),
                                  poly_mul(K, mu[static_cast<std::size_t>(s)], D.at(p, j)));
    }
    if (k > 0) {
        GradedMatrix& down = diffs[k - 1];
        for (int i = 0; i < down.rows(); ++i) {
            Polynomial acc = down.at(i, p);
            for (int s = 0; s < D.rows(); ++s) {
                if (s == p || mu[static_cast<std::size_t>(s)].is_zero() || down.at(i, s).is_zero())
                    continue;
                acc = poly_add(K, acc, poly_mul(K, mu[static_cast<std::size_t>(s)], down.at(i, s)));
            }
            down.at(i, p) = std::move(acc);
        }
    }

    /* delete generator q of F_{k+1} and generator p of F_k */
    auto drop_col = [](GradedMatrix& A, int col) {
        A.src_degs.erase(A.src_degs.begin() + col);
        for (auto& row : A.entries)
            row.erase(row.begin() + col);
    };
    auto drop_row = [](GradedMatrix& A, int row) {
        A.tgt_degs.erase(A.tgt_degs.begin() + row);
        A.entries.erase(A.entries.begin() + row);
    };
    drop_col(D, q);
    drop_row(D, p);
    if (k + 1 < diffs.size())
        drop_row(diffs[k + 1], q);
    if (k > 0)
        drop_col(diffs[k - 1], p);
    frees[k + 1].gen_degs.erase(frees[k + 1].gen_degs.begin() + q);
    frees[k].gen_degs.erase(frees[k].gen_degs.begin() + p);
}

void prune(const Ring& R, std::vector<FreeModule>& frees, std::vector<GradedMatrix>& diffs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < diffs.size() && !changed; ++k) {
            for (int i = 0; i < diffs[k].rows() && !changed; ++i)
                for (int j = 0; j < diffs[k].cols() && !changed; ++j)
                    if (diffs[k].at(i, j).is_unit_constant()) {
                        eliminate_unit(R, frees, diffs, k, i, j);
                        changed = true;
                    }
        }
    }
    /* drop empty tail */
    while (!diffs.empty() && frees.back().rank() == 0) {
        diffs.pop_back();
        frees.pop_back();
    }
    /* drop zero columns of the last differential (generators mapping to 0
     * would mean a free summand already split off; after unit elimination
     * they can only arise from a redundant zero relation) */
    if (!diffs.empty()) {
        GradedMatrix& top = diffs.back();
        for (int j = top.cols() - 1; j >= 0; --j)
            if (top.column(j).is_zero()) {
                top.src_degs.erase(top.src_degs.begin() + j);
                for (auto& row : top.entries)
                    row.erase(row.begin() + j);
                frees.back().gen_degs.erase(frees.back().gen_degs.begin() + j);
            }
        while (!diffs.empty() && frees.back().rank() == 0) {
            diffs.pop_back();
            frees.pop_back();
        }
    }
}

}  // namespace

FreeResolution minimal_free_resolution(const Ring& R, const PresentedModule& M) {
    FreeResolution res;
    res.frees.push_back(M.generators());

    FreeModule ambient = M.generators();
    std::vector<ModuleElement> gens;
    std::vector<int> degs;
    for (int j = 0; j < M.relations().cols(); ++j) {
        ModuleElement c = M.relations().column(j);
        if (!c.is_zero()) {
            gens.push_back(std::move(c));
            degs.push_back(M.relations().src_degs[static_cast<std::size_t>(j)]);
        }
    }

    const int cap = R.nvars() + 8;
    int step = 0;
    while (!gens.empty()) {
        if (++step > cap)
            throw std::logic_error("minimal_free_resolution: syzygy tower failed to terminate");
        GBasis G = buchberger(R, ambient, gens);
        if (G.gens.empty())
            break;
        std::vector<int> gdegs;
        for (const ModuleElement& g : G.gens)
            gdegs.push_back(*element_degree(ambient, g));
        res.diffs.push_back(GradedMatrix::from_columns(ambient.gen_degs, gdegs, G.gens));
        res.frees.push_back(FreeModule{gdegs});

        std::vector<ModuleElement> syz = syzygies_of_gb(R, G);
        ambient = FreeModule{gdegs};
        gens = std::move(syz);
    }

    prune(R, res.frees, res.diffs);
    res.minimal = true;

    if (res.length() > R.nvars())
        throw std::logic_error("minimal_free_resolution: length exceeds variable count");
    for (const GradedMatrix& d : res.diffs)
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                if (d.at(i, j).is_unit_constant())
                    throw std::logic_error("minimal_free_resolution: unit survived pruning");
    for (std::size_t k = 0; k + 1 < res.diffs.size(); ++k)
        if (!matrix_multiply(R.field(), res.diffs[k], res.diffs[k + 1]).is_zero())
            throw std::logic_error("minimal_free_resolution: composite differential nonzero");
    return res;
}

BettiTable betti_table(const FreeResolution& F) {
    BettiTable T;
    for (std::size_t i = 0; i < F.frees.size(); ++i)
        for (int d : F.frees[i].gen_degs)
            T.add(static_cast<int>(i), d, 1);
    return T;
}

int regularity_from_resolution(const Ring& R, const FreeResolution& F) {
    (void)R;
    BettiTable T = betti_table(F);
    if (T.entries.empty())
        throw std::invalid_argument("regularity: zero module");
    return T.regularity();
}

int regularity_betti_tail(const Ring& R, const FreeResolution& F, int s) {
    BettiTable T = betti_table(F);
    if (T.entries.empty())
        throw std::invalid_argument("regularity: zero module");
    bool any = false;
    int best = 0;
    for (int j = R.nvars() - s; j <= R.nvars(); ++j) {
        auto e = T.max_shift(j);
        if (e && (!any || *e - j > best)) {
            best = *e - j;
            any = true;
        }
    }
    if (!any)
        throw std::invalid_argument("regularity_betti_tail: no Betti numbers in the tail range");
    return best;
}

DepthCodim depth_and_codim(const Ring& R, const PresentedModule& M, const FreeResolution& F) {
    if (M.is_zero())
        throw std::invalid_argument("depth_and_codim: zero module");
    DepthCodim d;
    d.dim = M.krull_dim();
    d.codim = R.nvars() - d.dim;
    d.depth = R.nvars() - F.length();
    d.cohen_macaulay = (d.depth == d.dim);
    return d;
}

DepthCodim depth_and_codim(const Ring& R, const PresentedModule& M) {
    return depth_and_codim(R, M, minimal_free_resolution(R, M));
}

}  // namespace grmod
