#pragma once

#include <cstdint>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

/* Dense matrix over GF(p), row major. Only what the graded-piece
 * computations need: rank, nullity, kernel basis. */
class FpMatrix {
  public:
    FpMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::uint32_t& at(int i, int j) {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
    }
    std::uint32_t at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
    }

    int rank(const PrimeField& K) const;

    /* basis of { x : A x = 0 }, one vector per column of the result */
    std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeField& K) const;

  private:
    int rows_, cols_;
    std::vector<std::uint32_t> data_;
};

}  // namespace grmod
