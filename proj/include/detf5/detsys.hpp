#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detf5/gf.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

/// Sorted 0-based index set.
using Subset = std::vector<std::uint8_t>;

/// n x n matrix of linear forms in k variables. coeffs holds a_t^{(i,j)}
/// at [(t * n + i) * n + j], the same nesting as the instance file.
class LinearMatrix {
 public:
  LinearMatrix() = default;
  LinearMatrix(std::size_t n, std::size_t k, std::vector<Fp> coeffs, std::uint64_t seed = 0);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<Fp>& coeffs() const noexcept { return coeffs_; }
  Fp coeff(std::size_t t, std::size_t i, std::size_t j) const noexcept { return coeffs_[(t * n_ + i) * n_ + j]; }
  const Polynomial& entry(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }

  /// Square submatrix on the given rows and columns.
  LinearMatrix sub(const Subset& rows, const Subset& cols) const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<Fp> coeffs_;
  std::vector<Polynomial> entries_;
};

/// Draws the k*n^2 coefficients in file order (t, then i, then j).
LinearMatrix random_linear_matrix(std::size_t n, std::size_t k, const PrimeField& field, std::uint64_t seed);

/// Lexicographic rank of a sorted size-s subset of {0..n-1}.
std::size_t subset_rank(const Subset& s, std::size_t n);
Subset subset_unrank(std::size_t rank, std::size_t n, std::size_t size);
/// All size-s subsets of {0..n-1} in lexicographic order.
std::vector<Subset> all_subsets(std::size_t n, std::size_t size);

struct MinorIndex {
  Subset rows;
  Subset cols;
  std::size_t flat = 0;
};

/// Flat position of (rows, cols) in the lexicographic order on pairs.
std::size_t minor_flat(const Subset& rows, const Subset& cols, std::size_t n);

/// The (r+1)-minors of M in canonical order.
struct DetSystem {
  LinearMatrix matrix;
  std::size_t r = 0;
  std::vector<Polynomial> gens;
  std::vector<MinorIndex> index;

  std::size_t n() const noexcept { return matrix.n(); }
  std::size_t k() const noexcept { return matrix.k(); }
  std::size_t size() const noexcept { return gens.size(); }
  std::size_t flat(const Subset& rows, const Subset& cols) const { return minor_flat(rows, cols, matrix.n()); }
};

/// All minors of the given size. Laplace expansion along the first row with
/// every intermediate minor memoized, so the whole family costs little more
/// than the largest one.
DetSystem minors(const PrimeField& field, const LinearMatrix& m, std::size_t size);

/// Determinant of the submatrix on (rows, cols).
Polynomial determinant(const PrimeField& field, const LinearMatrix& m, const Subset& rows, const Subset& cols);

/// Entry (i, j) = (-1)^(i+j) times the minor deleting row i and column j.
std::vector<Polynomial> cofactor_matrix(const PrimeField& field, const LinearMatrix& m);

struct Submatrix {
  Subset rows;
  Subset cols;
  LinearMatrix matrix;
};

std::vector<Submatrix> submatrices(const LinearMatrix& m, std::size_t size);

/// Global flat index of a minor given in the coordinates of a submatrix.
std::size_t minor_index_map(const Subset& sub_rows, const Subset& sub_cols, const MinorIndex& local,
                            const DetSystem& ambient);

struct GuardReport {
  bool passed = false;
  std::size_t generator_rank = 0;
  std::size_t generator_expected = 0;
  // Only checked for r = n-2, k = 4, where the degree r+2 rank is known.
  std::optional<std::size_t> next_rank;
  std::optional<std::size_t> next_expected;
  std::string message;
};

/// Checks that the generators are as independent as a generic instance
/// makes them.
GuardReport genericity_check(const PrimeField& field, const DetSystem& ds);

struct GenericDraw {
  DetSystem system;
  GuardReport report;
  std::uint64_t seed = 0;  // seed that finally passed
  unsigned retries = 0;
};

/// Draws with seed, seed+1, ... until the guard passes. Throws
/// NonGenericInstance after max_tries failures.
GenericDraw draw_generic(const PrimeField& field, std::size_t n, std::size_t k, std::size_t r, std::uint64_t seed,
                         unsigned max_tries = 8);

}  // namespace detf5
