#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "detf5/gf.hpp"

namespace detf5 {

/// Row-major dense matrix over GF(p). Used by the oracles and guards, never
/// by the signature-tracking elimination.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  /// Appends a zero row and returns it.
  std::span<std::uint32_t> add_row();

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form in place. Zero rows end up at the bottom.
/// Returns the rank; `pivots` receives the pivot column of each nonzero row.
std::size_t rref(const PrimeField& field, DenseMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const PrimeField& field, DenseMatrix m);

/// Basis of {v : m v = 0}, one vector per row of the result.
DenseMatrix right_kernel(const PrimeField& field, const DenseMatrix& m);

}  // namespace detf5
