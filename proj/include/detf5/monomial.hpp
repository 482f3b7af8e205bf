#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace detf5 {

/// Power product x1^a1 * ... * xk^ak with dense exponent storage.
/// Variables are ordered x1 > x2 > ... > xk.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);
  Monomial(std::initializer_list<unsigned> exps);

  /// x_{var+1} in a ring with nvars variables (var is 0-based).
  static Monomial variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::uint16_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const std::uint16_t> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// 0-based index of the last variable with a nonzero exponent; 0 for 1.
  std::size_t max_variable() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  std::string to_string() const;

 private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Graded reverse lexicographic comparison. Throws DimensionError when the
/// variable counts differ.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

/// All monomials of degree d in k variables, strictly decreasing in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t k, unsigned d);

std::uint64_t binomial(std::int64_t n, std::int64_t r) noexcept;

/// Column index for one degree: the grevlex-decreasing monomial list, its
/// inverse map, and the table of products by single variables into the next
/// degree.
class DegreeBasis {
 public:
  DegreeBasis(std::size_t nvars, unsigned degree);

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monos_.size(); }
  const Monomial& operator[](std::size_t idx) const noexcept { return monos_[idx]; }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }

  /// Position of m in this basis; throws std::out_of_range when absent.
  std::uint32_t index_of(const Monomial& m) const;

 private:
  friend class MonomialTable;
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> lookup_;
  // times_var_[idx * nvars + j] = index of monos_[idx] * x_{j+1} one degree up.
  std::vector<std::uint32_t> times_var_;
};

/// Lazily grown cache of DegreeBasis objects for a fixed number of variables.
/// Safe to share between threads; returned references stay valid for the
/// lifetime of the table.
class MonomialTable {
 public:
  explicit MonomialTable(std::size_t nvars) : nvars_(nvars) {}
  MonomialTable(const MonomialTable&) = delete;
  MonomialTable& operator=(const MonomialTable&) = delete;

  std::size_t nvars() const noexcept { return nvars_; }

  const DegreeBasis& basis(unsigned d);

  /// Index table for multiplying degree-d monomials by each variable;
  /// entry [idx * nvars + j] indexes into basis(d + 1).
  std::span<const std::uint32_t> times_var(unsigned d);

 private:
  DegreeBasis& ensure(unsigned d);

  std::size_t nvars_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<DegreeBasis>> bases_;
};

}  // namespace detf5
