#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "detf5/detsys.hpp"
#include "detf5/gf.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

/// One coordinate of a symbolic syzygy: +-m_{row,col} at `position`.
/// Indices are 0-based and refer to the ambient matrix.
struct SymbolicTerm {
  std::uint32_t position = 0;
  bool negative = false;
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
  friend auto operator<=>(const SymbolicTerm&, const SymbolicTerm&) = default;
};

/// A syzygy whose coordinates are signed matrix entries, sorted by position,
/// together with its materialized module element.
struct Syzygy {
  std::vector<SymbolicTerm> terms;
  std::string tag;
  ModuleElement elem;
};

struct SyzygyBasis {
  std::size_t ambient_rank = 0;
  std::size_t nvars = 0;
  std::vector<Syzygy> syzygies;

  std::size_t size() const noexcept { return syzygies.size(); }
  std::vector<ModuleElement> elements() const;
};

/// Index of each first syzygy of the corank-one list, 0-based (i, j).
struct CorankOneLayout {
  std::size_t n;
  std::size_t type1(std::size_t i, std::size_t j) const noexcept { return i * (n - 1) + (j < i ? j : j - 1); }
  std::size_t type2(std::size_t i, std::size_t j) const noexcept { return n * (n - 1) + type1(i, j); }
  std::size_t type3(std::size_t i) const noexcept { return 2 * n * (n - 1) + i; }
  std::size_t type4(std::size_t j) const noexcept { return 2 * n * (n - 1) + (n - 1) + (j - 1); }
  std::size_t count() const noexcept { return 2 * n * n - 2; }
};

/// The 2n^2-2 first syzygies of the (n-1)-minors, families (i)..(iv) in
/// that order. Coordinates are signed entries of M, so apart from sign
/// flips no field operation happens here. Throws WrongCorank unless r = n-2.
SyzygyBasis syz_corank_one(const PrimeField& field, const DetSystem& ds);

/// First syzygies of the (r+1)-minors: the corank-one syzygies of every
/// (r+2)x(r+2) submatrix lifted to the ambient generator list, with
/// elements equal up to sign to an earlier one dropped.
SyzygyBasis syz_gen(const PrimeField& field, const DetSystem& ds);

/// The n^2 second syzygies, as coordinates over the list of syz_corank_one.
SyzygyBasis syz2_corank_one(const PrimeField& field, const DetSystem& ds);

struct ConjecturedCount {
  std::uint64_t value = 0;  // floor when not integral
  bool integral = true;
};

/// C(n, r+2)^2 (2(r+2)(r+1)/(n-r-1) + 2r + 2), evaluated exactly.
ConjecturedCount conjectured_syz_count(std::size_t n, std::size_t r);

/// Rank of the matrix whose rows are the coefficient vectors of degree-1
/// module elements (columns = position x variable).
std::size_t degree_one_rank(const PrimeField& field, const std::vector<ModuleElement>& elems);

}  // namespace detf5
