#include "detf5/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "detf5/linalg.hpp"

namespace detf5 {

namespace {

std::int64_t c3(std::int64_t a) { return a < 3 ? 0 : static_cast<std::int64_t>(binomial(a, 3)); }

}  // namespace

std::uint64_t hilbert_coeff(std::size_t n, unsigned d, HilbertVariant variant) {
  if (n < 3) throw std::invalid_argument("hilbert_coeff: need n >= 3");
  const std::int64_t r = static_cast<std::int64_t>(n) - 2;
  const std::int64_t dd = d;
  if (dd < r + 1) return 0;
  const std::int64_t n2 = static_cast<std::int64_t>(n * n);
  std::int64_t v = n2 * c3(dd - r + 2) - (2 * n2 - 2) * c3(dd - r + 1) + n2 * c3(dd - r);
  if (variant == HilbertVariant::FourTerm) v -= c3(dd - r - 1);
  const auto cols = static_cast<std::int64_t>(binomial(dd + 3, 3));
  if (dd > 2 * r + 1) v = std::min(v, cols);
  return static_cast<std::uint64_t>(std::max<std::int64_t>(v, 0));
}

unsigned expected_gb_maxdeg(std::size_t n, std::size_t r) {
  if (r < 1 || r + 2 > n) throw std::invalid_argument("expected_gb_maxdeg: need 1 <= r <= n-2");
  return static_cast<unsigned>(r * (n - r) + 1);
}

std::vector<RankPrediction> rank_predictions(std::size_t n, HilbertVariant variant) {
  std::vector<RankPrediction> out;
  for (unsigned d = static_cast<unsigned>(n - 1); d <= 2 * n - 3; ++d) {
    out.push_back({d, hilbert_coeff(n, d, variant), binomial(d + 3, 3)});
  }
  return out;
}

std::size_t rank_oracle(const PrimeField& field, const std::vector<Polynomial>& F, unsigned d) {
  if (F.empty()) return 0;
  const std::size_t k = F.front().nvars();
  const DegreeBasis cols(k, d);
  DenseMatrix m(0, cols.size());
  for (const Polynomial& f : F) {
    auto fd = f.degree();
    if (!fd) throw std::invalid_argument("rank_oracle: generators must be nonzero and homogeneous");
    if (*fd > d) continue;
    for (const Monomial& mu : monomials_of_degree(k, d - *fd)) {
      auto row = m.add_row();
      for (const Term& t : f.terms()) row[cols.index_of(t.mono * mu)] = t.coeff.v;
    }
  }
  return rank(field, std::move(m));
}

}  // namespace detf5
