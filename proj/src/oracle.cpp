#include "detf5/oracle.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "detf5/errors.hpp"
#include "detf5/linalg.hpp"

namespace detf5 {

Polynomial s_polynomial(const PrimeField& field, const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = scale(field, mono_mul(f, f.leading_monomial().quotient_of(l)), field.inv(f.leading_term().coeff));
  const Polynomial b = scale(field, mono_mul(g, g.leading_monomial().quotient_of(l)), field.inv(g.leading_term().coeff));
  return sub(field, a, b, Homogeneity::Ignore);
}

GroebnerBasis buchberger(const PrimeField& field, const std::vector<Polynomial>& F, const BuchbergerLimits& limits) {
  std::vector<Polynomial> G;
  std::size_t nvars = 0;
  for (const Polynomial& f : F) {
    nvars = f.nvars();
    if (f.is_zero()) continue;
    Polynomial r = normal_form(field, f, G);
    if (!r.is_zero()) G.push_back(make_monic(field, r));
  }
  // (lcm degree, i, j), smallest degree first, ties by insertion order.
  using Pair = std::tuple<unsigned, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.emplace(lcm(G[i].leading_monomial(), G[j].leading_monomial()).degree(), i, j);
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);
  std::size_t processed = 0;
  while (!queue.empty()) {
    auto [deg, i, j] = queue.top();
    queue.pop();
    if (++processed > limits.max_pairs) throw OracleTooLarge("buchberger: pair limit exceeded");
    Polynomial r = normal_form(field, s_polynomial(field, G[i], G[j]), G);
    if (r.is_zero()) continue;
    if (G.size() >= limits.max_basis) throw OracleTooLarge("buchberger: basis size limit exceeded");
    G.push_back(make_monic(field, r));
    push_pairs(G.size() - 1);
  }
  GroebnerBasis gb;
  gb.nvars = nvars;
  for (Polynomial& g : G) gb.elements.emplace_back(std::vector<Polynomial>{std::move(g)}, nvars);
  return interreduce(field, gb);
}

bool module_membership(const PrimeField& field, const ModuleElement& s, const std::vector<ModuleElement>& gens,
                       std::size_t max_rows) {
  if (s.is_zero()) return true;
  const unsigned d = *s.degree();
  const std::size_t t = s.rank();
  const std::size_t k = s.nvars();
  const DegreeBasis cols(k, d);
  DenseMatrix m(0, t * cols.size());
  auto put = [&](std::span<std::uint32_t> row, const ModuleElement& e) {
    for (std::size_t pos = 0; pos < t; ++pos) {
      for (const Term& term : e[pos].terms()) row[pos * cols.size() + cols.index_of(term.mono)] = term.coeff.v;
    }
  };
  for (const ModuleElement& g : gens) {
    if (g.rank() != t) throw DimensionError("module_membership: rank mismatch");
    auto gd = g.degree();
    if (!gd || *gd > d) continue;
    for (const Monomial& mu : monomials_of_degree(k, d - *gd)) {
      if (m.rows() >= max_rows) throw OracleTooLarge("module_membership: linear system too large");
      put(m.add_row(), mono_mul(g, mu));
    }
  }
  const std::size_t before = rank(field, m);
  put(m.add_row(), s);
  return rank(field, std::move(m)) == before;
}

}  // namespace detf5
