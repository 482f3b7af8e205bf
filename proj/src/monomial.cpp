#include "detf5/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detf5/errors.hpp"

namespace detf5 {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exps_.reserve(exps.size());
  for (unsigned e : exps) {
    exps_.push_back(static_cast<std::uint16_t>(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var) {
  Monomial m(nvars);
  m.exps_.at(var) = 1;
  m.degree_ = 1;
  return m;
}

std::size_t Monomial::max_variable() const noexcept {
  for (std::size_t i = exps_.size(); i-- > 0;) {
    if (exps_[i] != 0) return i;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw std::invalid_argument("Monomial::quotient_of: not a divisor");
  std::vector<std::uint16_t> q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(q));
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.exps_.size() != exps_.size()) throw DimensionError("Monomial product: variable count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("lcm: variable count mismatch");
  std::vector<std::uint16_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("grevlex_cmp: variable count mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];  // smaller last exponent wins
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<std::uint16_t>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t k, unsigned d) {
  if (k == 0) throw std::invalid_argument("monomials_of_degree: need at least one variable");
  std::vector<Monomial> out;
  out.reserve(binomial(static_cast<std::int64_t>(d + k - 1), static_cast<std::int64_t>(k - 1)));
  std::vector<std::uint16_t> cur(k, 0);
  enumerate(0, d, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t r) noexcept {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) acc = acc * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return acc;
}

DegreeBasis::DegreeBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monos_(monomials_of_degree(nvars, degree)) {
  lookup_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) lookup_.emplace(monos_[i], static_cast<std::uint32_t>(i));
}

std::uint32_t DegreeBasis::index_of(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) throw std::out_of_range("DegreeBasis::index_of: monomial " + m.to_string() + " not in basis");
  return it->second;
}

DegreeBasis& MonomialTable::ensure(unsigned d) {
  while (bases_.size() <= d) {
    bases_.push_back(std::make_unique<DegreeBasis>(nvars_, static_cast<unsigned>(bases_.size())));
  }
  return *bases_[d];
}

const DegreeBasis& MonomialTable::basis(unsigned d) {
  std::lock_guard lock(mutex_);
  return ensure(d);
}

std::span<const std::uint32_t> MonomialTable::times_var(unsigned d) {
  std::lock_guard lock(mutex_);
  DegreeBasis& lo = ensure(d);
  if (lo.times_var_.empty() && lo.size() != 0) {
    const DegreeBasis& hi = ensure(d + 1);
    lo.times_var_.resize(lo.size() * nvars_);
    for (std::size_t idx = 0; idx < lo.size(); ++idx) {
      for (std::size_t j = 0; j < nvars_; ++j) {
        lo.times_var_[idx * nvars_ + j] = hi.index_of(lo[idx] * Monomial::variable(nvars_, j));
      }
    }
  }
  return lo.times_var_;
}

}  // namespace detf5
