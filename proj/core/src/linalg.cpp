#include "grmod/linalg.hpp"

namespace grmod {

namespace {

/* returns pivot column per row of the echelonized copy */
std::vector<int> echelonize(FpMatrix& A, const PrimeField& K) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int p = -1;
        for (int i = row; i < A.rows(); ++i)
            if (A.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int j = 0; j < A.cols(); ++j)
                std::swap(A.at(p, j), A.at(row, j));
        std::uint32_t inv = K.inv(A.at(row, col));
        for (int j = col; j < A.cols(); ++j)
            A.at(row, j) = K.mul(inv, A.at(row, j));
        for (int i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col) == 0)
                continue;
            std::uint32_t f = A.at(i, col);
            for (int j = col; j < A.cols(); ++j)
                A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int FpMatrix::rank(const PrimeField& K) const {
    FpMatrix copy = *this;
    return static_cast<int>(echelonize(copy, K).size());
}

std::vector<std::vector<std::uint32_t>> FpMatrix::kernel_basis(const PrimeField& K) const {
    FpMatrix copy = *this;
    std::vector<int> pivots = echelonize(copy, K);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(cols_), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = K.neg(copy.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace grmod
