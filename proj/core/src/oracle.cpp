#include "grmod/oracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace grmod {
namespace oracle {

namespace {

constexpr std::size_t kPieceCap = 200000;  // basis elements per graded piece

/* exponent vectors of total degree d in r variables, lexicographic */
void enumerate_exponents(int r, int d, std::vector<int>& cur, int var,
                         std::vector<std::vector<int>>& out) {
    if (var == r - 1) {
        cur[static_cast<std::size_t>(var)] = d;
        out.push_back(cur);
        cur[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate_exponents(r, d - e, cur, var + 1, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

std::vector<std::vector<int>> monomials_of_degree(int r, int d) {
    std::vector<std::vector<int>> out;
    if (d < 0)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    enumerate_exponents(r, d, cur, 0, out);
    return out;
}

/* incremental row echelon subspace over GF(p) */
struct Echelon {
    const PrimeField* K = nullptr;
    int dim = 0;
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<int> pivots;

    Echelon() = default;
    Echelon(const PrimeField& field, int dimension) : K(&field), dim(dimension) {}

    void reduce(std::vector<std::uint32_t>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t c = v[static_cast<std::size_t>(pivots[r])];
            if (c == 0)
                continue;
            for (int j = 0; j < dim; ++j)
                v[static_cast<std::size_t>(j)] =
                    K->sub(v[static_cast<std::size_t>(j)], K->mul(c, rows[r][static_cast<std::size_t>(j)]));
        }
    }

    bool insert(std::vector<std::uint32_t> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < dim; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) {
                p = j;
                break;
            }
        if (p < 0)
            return false;
        std::uint32_t inv = K->inv(v[static_cast<std::size_t>(p)]);
        for (int j = 0; j < dim; ++j)
            v[static_cast<std::size_t>(j)] = K->mul(inv, v[static_cast<std::size_t>(j)]);
        /* keep earlier rows reduced against the new pivot */
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t c = rows[r][static_cast<std::size_t>(p)];
            if (c == 0)
                continue;
            for (int j = 0; j < dim; ++j)
                rows[r][static_cast<std::size_t>(j)] =
                    K->sub(rows[r][static_cast<std::size_t>(j)], K->mul(c, v[static_cast<std::size_t>(j)]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }
};

int popcount(unsigned m) { return __builtin_popcount(m); }

/* Graded piece of one Koszul spot: explicit basis of (Lambda^spot (x) F)_n
 * and the echelonized relation subspace (Lambda^spot (x) N)_n. */
struct Piece {
    std::vector<std::tuple<int, int, std::vector<int>>> basis;  // (subset id, gen, exponents)
    std::map<std::tuple<int, int, std::vector<int>>, int> index;
    Echelon relations;
    std::vector<int> free_cols;  // non-pivot columns: quotient coordinates
};

struct DenseKoszul {
    const Ring& R;
    std::vector<Polynomial> forms;
    FreeModule gens;
    GradedMatrix rel;

    std::vector<unsigned> masks;               // subsets per spot, numeric (colex) order
    std::vector<std::vector<unsigned>> by_spot; // masks of each popcount
    std::vector<int> form_degs;
    std::map<std::pair<int, int>, Piece> pieces;

    DenseKoszul(const Ring& ring, std::vector<Polynomial> fs, FreeModule g, GradedMatrix r)
        : R(ring), forms(std::move(fs)), gens(std::move(g)), rel(std::move(r)) {
        const int s = static_cast<int>(forms.size());
        by_spot.assign(static_cast<std::size_t>(s) + 1, {});
        for (unsigned m = 0; m < (1u << s); ++m)
            by_spot[static_cast<std::size_t>(popcount(m))].push_back(m);
        for (const Polynomial& f : forms)
            form_degs.push_back(*f.degree());
    }

    int nforms() const { return static_cast<int>(forms.size()); }

    int mask_degree(unsigned m) const {
        int d = 0;
        for (int k = 0; k < nforms(); ++k)
            if (m & (1u << k))
                d += form_degs[static_cast<std::size_t>(k)];
        return d;
    }

    const Piece& piece(int spot, int n) {
        auto it = pieces.find({spot, n});
        if (it != pieces.end())
            return it->second;

        const PrimeField& K = R.field();
        Piece P;
        if (spot >= 0 && spot <= nforms()) {
            const auto& subs = by_spot[static_cast<std::size_t>(spot)];
            for (std::size_t si = 0; si < subs.size(); ++si) {
                int dS = mask_degree(subs[si]);
                for (int g = 0; g < gens.rank(); ++g) {
                    int d = n - dS - gens.gen_deg(g);
                    for (auto& e : monomials_of_degree(R.nvars(), d)) {
                        P.basis.emplace_back(static_cast<int>(si), g, e);
                        if (P.basis.size() > kPieceCap)
                            throw std::runtime_error("oracle: graded piece exceeds the size cap");
                    }
                }
            }
        }
        P.relations = Echelon(K, static_cast<int>(P.basis.size()));
        for (std::size_t k = 0; k < P.basis.size(); ++k)
            P.index[P.basis[k]] = static_cast<int>(k);

        /* relation subspace: e_S (x) m * (relation column) */
        if (spot >= 0 && spot <= nforms() && !P.basis.empty()) {
            const auto& subs = by_spot[static_cast<std::size_t>(spot)];
            for (std::size_t si = 0; si < subs.size(); ++si) {
                int dS = mask_degree(subs[si]);
                for (int j = 0; j < rel.cols(); ++j) {
                    int md = n - dS - rel.src_degs[static_cast<std::size_t>(j)];
                    for (auto& me : monomials_of_degree(R.nvars(), md)) {
                        std::vector<std::uint32_t> v(P.basis.size(), 0);
                        bool nonzero = false;
                        for (int g = 0; g < gens.rank(); ++g) {
                            const Polynomial& entry = rel.at(g, j);
                            for (const Term& t : entry.terms()) {
                                std::vector<int> prod = t.mon.exps;
                                for (std::size_t v2 = 0; v2 < prod.size(); ++v2)
                                    prod[v2] += me[v2];
                                auto key = std::make_tuple(static_cast<int>(si), g, prod);
                                auto pit = P.index.find(key);
                                if (pit == P.index.end())
                                    throw std::logic_error("oracle: relation expansion missed the basis");
                                v[static_cast<std::size_t>(pit->second)] =
                                    K.add(v[static_cast<std::size_t>(pit->second)], t.coeff);
                                nonzero = true;
                            }
                        }
                        if (nonzero)
                            P.relations.insert(std::move(v));
                    }
                }
            }
        }

        for (int c = 0; c < static_cast<int>(P.basis.size()); ++c) {
            bool pivot = false;
            for (int pc : P.relations.pivots)
                if (pc == c) {
                    pivot = true;
                    break;
                }
            if (!pivot)
                P.free_cols.push_back(c);
        }
        return pieces.emplace(std::make_pair(spot, n), std::move(P)).first->second;
    }

    long long quotient_dim(int spot, int n) {
        const Piece& P = piece(spot, n);
        return static_cast<long long>(P.free_cols.size());
    }

    /* rank of the induced map d_spot : (spot, n) -> (spot-1, n) on quotients */
    int quotient_map_rank(int spot, int n) {
        if (spot <= 0 || spot > nforms())
            return 0;
        const PrimeField& K = R.field();
        /* materialize source and target pieces first; references into the
         * map stay valid because pieces are never erased */
        piece(spot, n);
        piece(spot - 1, n);
        const Piece& src = pieces.at({spot, n});
        const Piece& tgt = pieces.at({spot - 1, n});
        if (src.free_cols.empty() || tgt.basis.empty())
            return 0;

        const auto& tgt_subs = by_spot[static_cast<std::size_t>(spot - 1)];
        Echelon image(K, static_cast<int>(tgt.basis.size()));
        for (int c : src.free_cols) {
            const auto& [si, g, me] = src.basis[static_cast<std::size_t>(c)];
            unsigned mask = by_spot[static_cast<std::size_t>(spot)][static_cast<std::size_t>(si)];
            std::vector<std::uint32_t> v(tgt.basis.size(), 0);
            int sign_idx = 0;
            for (int k = 0; k < nforms(); ++k) {
                if (!(mask & (1u << k)))
                    continue;
                unsigned sub = mask & ~(1u << k);
                int ti = -1;
                for (std::size_t q = 0; q < tgt_subs.size(); ++q)
                    if (tgt_subs[q] == sub) {
                        ti = static_cast<int>(q);
                        break;
                    }
                bool negative = (sign_idx % 2) != 0;
                for (const Term& t : forms[static_cast<std::size_t>(k)].terms()) {
                    std::vector<int> prod = t.mon.exps;
                    for (std::size_t v2 = 0; v2 < prod.size(); ++v2)
                        prod[v2] += me[v2];
                    auto key = std::make_tuple(ti, g, prod);
                    auto pit = tgt.index.find(key);
                    if (pit == tgt.index.end())
                        throw std::logic_error("oracle: differential image missed the basis");
                    std::uint32_t coeff = negative ? K.neg(t.coeff) : t.coeff;
                    v[static_cast<std::size_t>(pit->second)] =
                        K.add(v[static_cast<std::size_t>(pit->second)], coeff);
                }
                ++sign_idx;
            }
            tgt.relations.reduce(v);
            image.insert(std::move(v));
        }
        return image.rank();
    }

    long long homology_dim(int spot, int n) {
        if (spot < 0 || spot > nforms())
            return 0;
        long long q = quotient_dim(spot, n);
        if (q == 0)
            return 0;
        return q - quotient_map_rank(spot, n) - quotient_map_rank(spot + 1, n);
    }
};

}  // namespace

std::map<int, long long> module_dims(const Ring& R, const FreeModule& gens, const GradedMatrix& rel,
                                     int lo, int hi) {
    DenseKoszul D(R, {}, gens, rel);
    std::map<int, long long> out;
    for (int n = lo; n <= hi; ++n)
        out[n] = D.quotient_dim(0, n);
    return out;
}

std::map<int, long long> koszul_homology_dims(const Ring& R, const std::vector<Polynomial>& forms,
                                              const FreeModule& gens, const GradedMatrix& rel,
                                              int spot, int lo, int hi) {
    DenseKoszul D(R, forms, gens, rel);
    std::map<int, long long> out;
    for (int n = lo; n <= hi; ++n)
        out[n] = D.homology_dim(spot, n);
    return out;
}

BettiTable tor_dims(const Ring& R, const FreeModule& gens, const GradedMatrix& rel, int lo, int hi) {
    std::vector<Polynomial> vars;
    for (int v = 0; v < R.nvars(); ++v)
        vars.push_back(Polynomial::monomial_term(1, Monomial::variable(R.nvars(), v)));
    DenseKoszul D(R, vars, gens, rel);
    BettiTable T;
    for (int i = 0; i <= R.nvars(); ++i)
        for (int j = lo; j <= hi; ++j)
            T.add(i, j, D.homology_dim(i, j));
    return T;
}

}  // namespace oracle
}  // namespace grmod
