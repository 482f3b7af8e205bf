#include "detf5/linalg.hpp"

#include <algorithm>

namespace detf5 {

std::span<std::uint32_t> DenseMatrix::add_row() {
  data_.resize(data_.size() + cols_, 0);
  ++rows_;
  return row(rows_ - 1);
}

std::size_t rref(const PrimeField& field, DenseMatrix& m, std::vector<std::size_t>* pivots) {
  const std::uint64_t p = field.modulus();
  std::size_t rank = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(rank).begin());
    auto prow = m.row(rank);
    const std::uint64_t inv = field.inv_raw(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      auto row = m.row(r);
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + neg * prow[j]) % p);
      }
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

std::size_t rank(const PrimeField& field, DenseMatrix m) { return rref(field, m); }

DenseMatrix right_kernel(const PrimeField& field, const DenseMatrix& m) {
  DenseMatrix e = m;
  std::vector<std::size_t> pivots;
  const std::size_t rk = rref(field, e, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  DenseMatrix out(0, m.cols());
  const std::uint32_t p = field.modulus();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    auto v = out.add_row();
    v[free] = 1;
    for (std::size_t r = 0; r < rk; ++r) {
      const std::uint32_t a = e.at(r, free);
      v[pivots[r]] = a == 0 ? 0 : p - a;
    }
  }
  return out;
}

}  // namespace detf5
