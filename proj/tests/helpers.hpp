#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "detf5/gf.hpp"
#include "detf5/monomial.hpp"
#include "detf5/polynomial.hpp"

namespace testutil {

using detf5::Fp;
using detf5::Monomial;
using detf5::Polynomial;
using detf5::PrimeField;

// poly(F, 4, {{3, {1,0,0,0}}, {2, {0,1,0,0}}}) = 3*x1 + 2*x2
inline Polynomial poly(const PrimeField& field, std::size_t nvars,
                       std::initializer_list<std::pair<std::int64_t, std::vector<std::uint16_t>>> terms) {
  std::vector<detf5::Term> ts;
  for (const auto& [c, e] : terms) ts.push_back({Monomial(e), field.from_int(c)});
  return Polynomial::from_terms(field, nvars, std::move(ts));
}

inline Polynomial var(std::size_t nvars, std::size_t v) { return Polynomial::monomial(Monomial::variable(nvars, v)); }

// Square-and-multiply in plain integers; independent of PrimeField::inv.
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Plain Gaussian elimination mod p, kept separate from the library's linalg.
inline std::size_t dense_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][c], p - 2, p);
    for (std::uint64_t& x : a[rank]) x = x % p * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      const std::uint64_t f = a[r][c] % p;
      for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] = (a[r][cc] + (p - f) * a[rank][cc]) % p;
    }
    ++rank;
  }
  return rank;
}

// Coefficient matrix of homogeneous polynomials of one degree.
inline std::vector<std::vector<std::uint64_t>> coefficient_rows(const std::vector<Polynomial>& polys, std::size_t k,
                                                                 unsigned d) {
  const auto monos = detf5::monomials_of_degree(k, d);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Polynomial& f : polys) {
    std::vector<std::uint64_t> row(monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) row[c] = f.coefficient(monos[c]).v;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace testutil
