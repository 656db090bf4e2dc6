#include "grmod/free_module.hpp"

#include <stdexcept>

namespace grmod {

int module_term_cmp(const FreeModule& F, int pos_a, const Monomial& a, int pos_b, const Monomial& b) {
    int da = a.deg + F.gen_deg(pos_a);
    int db = b.deg + F.gen_deg(pos_b);
    if (da != db)
        return da < db ? -1 : 1;
    if (pos_a != pos_b)
        return pos_a > pos_b ? -1 : 1;  // earlier position is greater
    return degrevlex_cmp(a, b);
}

std::optional<ModTerm> leading_term(const FreeModule& F, const ModuleElement& v) {
    std::optional<ModTerm> best;
    for (int pos = 0; pos < v.rank(); ++pos) {
        const Polynomial& f = v.comps[static_cast<std::size_t>(pos)];
        if (f.is_zero())
            continue;
        const Term& lt = f.leading_term();
        if (!best || module_term_cmp(F, pos, lt.mon, best->pos, best->mon) > 0)
            best = ModTerm{pos, lt.coeff, lt.mon};
    }
    return best;
}

std::optional<int> element_degree(const FreeModule& F, const ModuleElement& v) {
    std::optional<int> deg;
    for (int pos = 0; pos < v.rank(); ++pos) {
        const Polynomial& f = v.comps[static_cast<std::size_t>(pos)];
        if (f.is_zero())
            continue;
        int d = *f.degree() + F.gen_deg(pos);
        if (!deg)
            deg = d;
        else if (*deg != d)
            throw std::invalid_argument("element_degree: element is not homogeneous");
    }
    return deg;
}

bool element_is_homogeneous(const FreeModule& F, const ModuleElement& v) {
    std::optional<int> deg;
    for (int pos = 0; pos < v.rank(); ++pos) {
        const Polynomial& f = v.comps[static_cast<std::size_t>(pos)];
        if (f.is_zero())
            continue;
        if (!f.is_homogeneous())
            return false;
        int d = *f.degree() + F.gen_deg(pos);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return false;
    }
    return true;
}

ModuleElement elem_add(const PrimeField& K, const ModuleElement& a, const ModuleElement& b) {
    ModuleElement r = a;
    for (std::size_t i = 0; i < r.comps.size(); ++i)
        r.comps[i] = poly_add(K, a.comps[i], b.comps[i]);
    return r;
}

ModuleElement elem_sub(const PrimeField& K, const ModuleElement& a, const ModuleElement& b) {
    ModuleElement r = a;
    for (std::size_t i = 0; i < r.comps.size(); ++i)
        r.comps[i] = poly_sub(K, a.comps[i], b.comps[i]);
    return r;
}

ModuleElement elem_scalar_mul(const PrimeField& K, std::uint32_t c, const ModuleElement& a) {
    ModuleElement r = a;
    for (Polynomial& f : r.comps)
        f = poly_scalar_mul(K, c, f);
    return r;
}

ModuleElement elem_term_mul(const PrimeField& K, const ModuleElement& a, std::uint32_t c, const Monomial& m) {
    ModuleElement r = a;
    for (Polynomial& f : r.comps)
        f = poly_term_mul(K, f, c, m);
    return r;
}

ModuleElement elem_poly_mul(const PrimeField& K, const Polynomial& f, const ModuleElement& a) {
    ModuleElement r = a;
    for (Polynomial& g : r.comps)
        g = poly_mul(K, f, g);
    return r;
}

GradedMatrix GradedMatrix::zero(std::vector<int> tgt, std::vector<int> src) {
    GradedMatrix A;
    A.tgt_degs = std::move(tgt);
    A.src_degs = std::move(src);
    A.entries.assign(A.tgt_degs.size(), std::vector<Polynomial>(A.src_degs.size()));
    return A;
}

GradedMatrix GradedMatrix::from_columns(std::vector<int> tgt, const std::vector<int>& src,
                                        const std::vector<ModuleElement>& cols) {
    GradedMatrix A = zero(std::move(tgt), src);
    if (cols.size() != src.size())
        throw std::invalid_argument("GradedMatrix::from_columns: size mismatch");
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rank() != A.rows())
            throw std::invalid_argument("GradedMatrix::from_columns: column rank mismatch");
        for (int i = 0; i < A.rows(); ++i)
            A.at(i, static_cast<int>(j)) = cols[j].comps[static_cast<std::size_t>(i)];
    }
    return A;
}

ModuleElement GradedMatrix::column(int j) const {
    ModuleElement v = ModuleElement::zero(rows());
    for (int i = 0; i < rows(); ++i)
        v.comps[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

std::vector<ModuleElement> GradedMatrix::columns() const {
    std::vector<ModuleElement> out;
    out.reserve(static_cast<std::size_t>(cols()));
    for (int j = 0; j < cols(); ++j)
        out.push_back(column(j));
    return out;
}

GradedMatrix GradedMatrix::transposed() const {
    GradedMatrix A;
    A.src_degs = tgt_degs;
    A.tgt_degs = src_degs;
    A.entries.assign(src_degs.size(), std::vector<Polynomial>(tgt_degs.size()));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            A.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = at(i, j);
    return A;
}

GradedMatrix GradedMatrix::twisted(int k) const {
    GradedMatrix A = *this;
    for (int& d : A.src_degs)
        d += k;
    for (int& d : A.tgt_degs)
        d += k;
    return A;
}

bool GradedMatrix::is_degree_zero_map() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const Polynomial& f = at(i, j);
            if (f.is_zero())
                continue;
            if (!f.is_homogeneous())
                return false;
            if (*f.degree() != src_degs[static_cast<std::size_t>(j)] - tgt_degs[static_cast<std::size_t>(i)])
                return false;
        }
    return true;
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : entries)
        for (const Polynomial& f : row)
            if (!f.is_zero())
                return false;
    return true;
}

ModuleElement matrix_apply(const PrimeField& K, const GradedMatrix& A, const ModuleElement& v) {
    if (v.rank() != A.cols())
        throw std::invalid_argument("matrix_apply: rank mismatch");
    ModuleElement r = ModuleElement::zero(A.rows());
    for (int j = 0; j < A.cols(); ++j) {
        const Polynomial& c = v.comps[static_cast<std::size_t>(j)];
        if (c.is_zero())
            continue;
        for (int i = 0; i < A.rows(); ++i) {
            if (A.at(i, j).is_zero())
                continue;
            r.comps[static_cast<std::size_t>(i)] =
                poly_add(K, r.comps[static_cast<std::size_t>(i)], poly_mul(K, A.at(i, j), c));
        }
    }
    return r;
}

GradedMatrix matrix_multiply(const PrimeField& K, const GradedMatrix& A, const GradedMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("matrix_multiply: shape mismatch");
    GradedMatrix C = GradedMatrix::zero(A.tgt_degs, B.src_degs);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) {
            Polynomial acc;
            for (int k = 0; k < A.cols(); ++k) {
                if (A.at(i, k).is_zero() || B.at(k, j).is_zero())
                    continue;
                acc = poly_add(K, acc, poly_mul(K, A.at(i, k), B.at(k, j)));
            }
            C.at(i, j) = std::move(acc);
        }
    return C;
}

GradedMatrix matrix_concat_cols(const GradedMatrix& A, const GradedMatrix& B) {
    if (A.tgt_degs != B.tgt_degs)
        throw std::invalid_argument("matrix_concat_cols: target mismatch");
    GradedMatrix C = A;
    for (int j = 0; j < B.cols(); ++j) {
        C.src_degs.push_back(B.src_degs[static_cast<std::size_t>(j)]);
        for (int i = 0; i < C.rows(); ++i)
            C.entries[static_cast<std::size_t>(i)].push_back(B.at(i, j));
    }
    return C;
}

}  // namespace grmod
