#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detf5/gf.hpp"
#include "detf5/monomial.hpp"

namespace detf5 {

struct Term {
  Monomial mono;
  Fp coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Homogeneity { Enforce, Ignore };

/// Sparse polynomial over GF(p): terms sorted strictly decreasing in grevlex,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const PrimeField& field, std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, Fp c);
  static Polynomial monomial(const Monomial& m, Fp c = Fp{1});
  /// Terms must already be strictly grevlex-decreasing with nonzero coefficients.
  static Polynomial from_sorted(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }

  bool is_homogeneous() const noexcept;
  /// Common degree of a nonzero homogeneous polynomial; nullopt otherwise.
  std::optional<unsigned> degree() const noexcept;
  unsigned max_degree() const noexcept;

  /// Coefficient of m, zero when absent.
  Fp coefficient(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial add(const PrimeField& field, const Polynomial& a, const Polynomial& b,
               Homogeneity h = Homogeneity::Enforce);
Polynomial sub(const PrimeField& field, const Polynomial& a, const Polynomial& b,
               Homogeneity h = Homogeneity::Enforce);
Polynomial scale(const PrimeField& field, const Polynomial& a, Fp c);
Polynomial negate(const PrimeField& field, const Polynomial& a);
Polynomial mono_mul(const Polynomial& a, const Monomial& m);
Polynomial mul(const PrimeField& field, const Polynomial& a, const Polynomial& b);
/// a + c * m * b, the basic reduction step.
Polynomial add_scaled(const PrimeField& field, const Polynomial& a, Fp c, const Monomial& m,
                      const Polynomial& b);
Fp evaluate(const PrimeField& field, const Polynomial& a, std::span<const Fp> point);
/// Substitute 1 for variable `var` (0-based); the variable count is kept.
Polynomial dehomogenize(const PrimeField& field, const Polynomial& a, std::size_t var);
/// Scale so the leading coefficient is 1.
Polynomial make_monic(const PrimeField& field, const Polynomial& a);

/// Basis term mono * e_position of a free module. Positions are 0-based.
struct ModuleMonomial {
  std::size_t position = 0;
  Monomial mono;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

/// Position over term: the larger position is greater, grevlex breaks ties.
std::strong_ordering pot_cmp(const ModuleMonomial& a, const ModuleMonomial& b);

/// Same position and the monomial divides.
bool module_divides(const ModuleMonomial& a, const ModuleMonomial& b) noexcept;

/// Element of R^t whose nonzero coordinates are homogeneous of one degree.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(std::size_t rank, std::size_t nvars) : coords_(rank, Polynomial(nvars)), nvars_(nvars) {}
  /// Throws HomogeneityError unless all nonzero coordinates share one degree.
  explicit ModuleElement(std::vector<Polynomial> coords, std::size_t nvars);

  std::size_t rank() const noexcept { return coords_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const Polynomial& operator[](std::size_t i) const noexcept { return coords_[i]; }
  const std::vector<Polynomial>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;
  /// Common coordinate degree; nullopt for the zero element.
  std::optional<unsigned> degree() const noexcept;
  std::size_t support_size() const noexcept;

  void set(std::size_t i, Polynomial p);

  std::string to_string() const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<Polynomial> coords_;
  std::size_t nvars_ = 0;
};

/// POT-greatest module monomial with its coefficient. Throws EmptySupport for 0.
std::pair<ModuleMonomial, Fp> leading_term_pot(const ModuleElement& f);

ModuleElement scale(const PrimeField& field, const ModuleElement& f, Fp c);
ModuleElement mono_mul(const ModuleElement& f, const Monomial& m);

/// Sum_j s_j * gens_j, the image of s under the map R^t -> R.
Polynomial contract(const PrimeField& field, const ModuleElement& s, const std::vector<Polynomial>& gens);
/// Sum_j s_j * gens_j for module generators.
ModuleElement contract(const PrimeField& field, const ModuleElement& s, const std::vector<ModuleElement>& gens);

}  // namespace detf5
