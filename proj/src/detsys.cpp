#include "detf5/detsys.hpp"

#include <bit>
#include <unordered_map>

#include "detf5/errors.hpp"
#include "detf5/hilbert.hpp"
#include "detf5/linalg.hpp"

namespace detf5 {

LinearMatrix::LinearMatrix(std::size_t n, std::size_t k, std::vector<Fp> coeffs, std::uint64_t seed)
    : n_(n), k_(k), seed_(seed), coeffs_(std::move(coeffs)) {
  if (n < 1 || k < 1) throw DimensionError("LinearMatrix: need n >= 1 and k >= 1");
  if (coeffs_.size() != k * n * n) throw DimensionError("LinearMatrix: expected k*n^2 coefficients");
  entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (std::size_t t = 0; t < k; ++t) {
        Fp c = coeff(t, i, j);
        if (c.v != 0) terms.push_back({Monomial::variable(k, t), c});
      }
      // x1 > x2 > ... so the terms are already in decreasing order.
      entries_.push_back(Polynomial::from_sorted(k, std::move(terms)));
    }
  }
}

LinearMatrix LinearMatrix::sub(const Subset& rows, const Subset& cols) const {
  if (rows.size() != cols.size()) throw DimensionError("LinearMatrix::sub: submatrix must be square");
  const std::size_t s = rows.size();
  std::vector<Fp> c(k_ * s * s);
  for (std::size_t t = 0; t < k_; ++t) {
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        if (rows[a] >= n_ || cols[b] >= n_) throw DimensionError("LinearMatrix::sub: index out of range");
        c[(t * s + a) * s + b] = coeff(t, rows[a], cols[b]);
      }
    }
  }
  return LinearMatrix(s, k_, std::move(c), seed_);
}

LinearMatrix random_linear_matrix(std::size_t n, std::size_t k, const PrimeField& field, std::uint64_t seed) {
  if (n < 2) throw DimensionError("random_linear_matrix: need n >= 2");
  Rng rng(seed);
  std::vector<Fp> coeffs(k * n * n);
  for (Fp& c : coeffs) c = rand_elem(field, rng);
  return LinearMatrix(n, k, std::move(coeffs), seed);
}

std::size_t subset_rank(const Subset& s, std::size_t n) {
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t v = next; v < s[i]; ++v) {
      rank += binomial(static_cast<std::int64_t>(n - 1 - v), static_cast<std::int64_t>(s.size() - 1 - i));
    }
    next = s[i] + 1u;
  }
  return rank;
}

Subset subset_unrank(std::size_t rank, std::size_t n, std::size_t size) {
  Subset s;
  std::size_t v = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (;; ++v) {
      auto block = binomial(static_cast<std::int64_t>(n - 1 - v), static_cast<std::int64_t>(size - 1 - i));
      if (rank < block) break;
      rank -= block;
    }
    s.push_back(static_cast<std::uint8_t>(v++));
  }
  return s;
}

std::vector<Subset> all_subsets(std::size_t n, std::size_t size) {
  std::vector<Subset> out;
  const auto count = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(size));
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(subset_unrank(i, n, size));
  return out;
}

std::size_t minor_flat(const Subset& rows, const Subset& cols, std::size_t n) {
  const auto per = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(cols.size()));
  return subset_rank(rows, n) * per + subset_rank(cols, n);
}

namespace {

std::uint32_t mask_of(const Subset& s) {
  std::uint32_t m = 0;
  for (auto v : s) m |= 1u << v;
  return m;
}

// Memoized Laplace expansion on dense coefficient vectors.
class LaplaceEngine {
 public:
  LaplaceEngine(const PrimeField& field, const LinearMatrix& m) : field_(field), m_(m), table_(m.k()) {
    if (m.n() > 32) throw DimensionError("determinant: n > 32 not supported");
  }

  const std::vector<std::uint32_t>& det(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const unsigned s = static_cast<unsigned>(std::popcount(rows));
    const std::size_t k = m_.k();
    const std::uint64_t p = field_.modulus();
    const unsigned r0 = static_cast<unsigned>(std::countr_zero(rows));
    std::vector<std::uint32_t> out;
    if (s == 1) {
      out.assign(k, 0);
      const unsigned c0 = static_cast<unsigned>(std::countr_zero(cols));
      for (std::size_t t = 0; t < k; ++t) out[t] = m_.coeff(t, r0, c0).v;
    } else {
      const auto& hi = table_.basis(s);
      const auto tv = table_.times_var(s - 1);
      std::vector<std::uint64_t> acc(hi.size(), 0);
      unsigned q = 0;
      std::uint64_t ops = 0;
      for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1, ++q) {
        const unsigned c = static_cast<unsigned>(std::countr_zero(rest));
        const auto& minor = det(rows & ~(1u << r0), cols & ~(1u << c));
        for (std::size_t t = 0; t < k; ++t) {
          std::uint64_t a = m_.coeff(t, r0, c).v;
          if (a == 0) continue;
          if (q % 2 == 1) a = p - a;
          for (std::size_t idx = 0; idx < minor.size(); ++idx) {
            if (minor[idx] == 0) continue;
            acc[tv[idx * k + t]] += a * minor[idx] % p;
            ops += 2;
          }
        }
      }
      field_op_counter().arith += ops;
      out.resize(acc.size());
      for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  Polynomial polynomial(const std::vector<std::uint32_t>& v, unsigned degree) {
    const auto& basis = table_.basis(degree);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) terms.push_back({basis[i], Fp{v[i]}});
    }
    return Polynomial::from_sorted(m_.k(), std::move(terms));
  }

  Polynomial det_poly(const Subset& rows, const Subset& cols) {
    if (rows.size() != cols.size() || rows.empty()) throw DimensionError("determinant: need a nonempty square submatrix");
    for (auto v : rows) {
      if (v >= m_.n()) throw DimensionError("determinant: row index out of range");
    }
    for (auto v : cols) {
      if (v >= m_.n()) throw DimensionError("determinant: column index out of range");
    }
    return polynomial(det(mask_of(rows), mask_of(cols)), static_cast<unsigned>(rows.size()));
  }

 private:
  const PrimeField& field_;
  const LinearMatrix& m_;
  MonomialTable table_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> memo_;
};

}  // namespace

DetSystem minors(const PrimeField& field, const LinearMatrix& m, std::size_t size) {
  if (size < 1 || size > m.n()) throw DimensionError("minors: size must lie in [1, n]");
  DetSystem ds;
  ds.matrix = m;
  ds.r = size - 1;
  LaplaceEngine engine(field, m);
  const auto subsets = all_subsets(m.n(), size);
  for (const Subset& rows : subsets) {
    for (const Subset& cols : subsets) {
      ds.index.push_back({rows, cols, ds.gens.size()});
      ds.gens.push_back(engine.det_poly(rows, cols));
    }
  }
  return ds;
}

Polynomial determinant(const PrimeField& field, const LinearMatrix& m, const Subset& rows, const Subset& cols) {
  LaplaceEngine engine(field, m);
  return engine.det_poly(rows, cols);
}

std::vector<Polynomial> cofactor_matrix(const PrimeField& field, const LinearMatrix& m) {
  const std::size_t n = m.n();
  if (n < 2) throw DimensionError("cofactor_matrix: need n >= 2");
  LaplaceEngine engine(field, m);
  std::vector<Polynomial> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Subset rows, cols;
      for (std::size_t a = 0; a < n; ++a) {
        if (a != i) rows.push_back(static_cast<std::uint8_t>(a));
        if (a != j) cols.push_back(static_cast<std::uint8_t>(a));
      }
      Polynomial minor = engine.det_poly(rows, cols);
      out.push_back((i + j) % 2 == 0 ? std::move(minor) : negate(field, minor));
    }
  }
  return out;
}

std::vector<Submatrix> submatrices(const LinearMatrix& m, std::size_t size) {
  if (size < 1 || size > m.n()) throw DimensionError("submatrices: size must lie in [1, n]");
  std::vector<Submatrix> out;
  const auto subsets = all_subsets(m.n(), size);
  for (const Subset& rows : subsets) {
    for (const Subset& cols : subsets) out.push_back({rows, cols, m.sub(rows, cols)});
  }
  return out;
}

std::size_t minor_index_map(const Subset& sub_rows, const Subset& sub_cols, const MinorIndex& local,
                            const DetSystem& ambient) {
  if (local.rows.size() != ambient.r + 1 || local.cols.size() != ambient.r + 1) {
    throw DimensionError("minor_index_map: local minor size differs from the ambient one");
  }
  Subset rows, cols;
  for (auto a : local.rows) {
    if (a >= sub_rows.size() || sub_rows[a] >= ambient.n()) throw DimensionError("minor_index_map: row out of range");
    rows.push_back(sub_rows[a]);
  }
  for (auto b : local.cols) {
    if (b >= sub_cols.size() || sub_cols[b] >= ambient.n()) throw DimensionError("minor_index_map: column out of range");
    cols.push_back(sub_cols[b]);
  }
  return ambient.flat(rows, cols);
}

GuardReport genericity_check(const PrimeField& field, const DetSystem& ds) {
  GuardReport rep;
  const unsigned deg = static_cast<unsigned>(ds.r + 1);
  const DegreeBasis cols(ds.k(), deg);
  DenseMatrix m(0, cols.size());
  for (const Polynomial& g : ds.gens) {
    auto row = m.add_row();
    for (const Term& t : g.terms()) row[cols.index_of(t.mono)] = t.coeff.v;
  }
  rep.generator_rank = rank(field, std::move(m));
  rep.generator_expected = std::min(ds.gens.size(), cols.size());
  rep.passed = rep.generator_rank == rep.generator_expected;
  if (rep.passed && ds.r + 2 == ds.n() && ds.k() == 4 && ds.n() >= 3) {
    rep.next_rank = rank_oracle(field, ds.gens, deg + 1);
    rep.next_expected = hilbert_coeff(ds.n(), deg + 1);
    rep.passed = rep.passed && *rep.next_rank == *rep.next_expected;
  }
  rep.message = "generator rank " + std::to_string(rep.generator_rank) + "/" + std::to_string(rep.generator_expected);
  if (rep.next_rank) {
    rep.message += ", degree " + std::to_string(deg + 1) + " rank " + std::to_string(*rep.next_rank) + "/" +
                   std::to_string(*rep.next_expected);
  }
  return rep;
}

GenericDraw draw_generic(const PrimeField& field, std::size_t n, std::size_t k, std::size_t r, std::uint64_t seed,
                         unsigned max_tries) {
  GenericDraw out;
  for (unsigned attempt = 0; attempt < max_tries; ++attempt) {
    out.seed = seed + attempt;
    out.retries = attempt;
    out.system = minors(field, random_linear_matrix(n, k, field, out.seed), r + 1);
    out.report = genericity_check(field, out.system);
    if (out.report.passed) return out;
  }
  throw NonGenericInstance("genericity guard failed for " + std::to_string(max_tries) + " seeds starting at " +
                               std::to_string(seed) + ": " + out.report.message,
                           "");
}

}  // namespace detf5
