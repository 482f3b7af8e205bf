#include <algorithm>
#include <numeric>

#include "detf5/detsys.hpp"
#include "detf5/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace detf5;

namespace {

// Leibniz expansion over all permutations.
Polynomial leibniz(const PrimeField& F, const LinearMatrix& m, const Subset& rows, const Subset& cols) {
  const std::size_t s = rows.size();
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc(m.k());
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = a + 1; b < s; ++b) inversions += perm[a] > perm[b];
    Polynomial term = Polynomial::constant(m.k(), F.one());
    for (std::size_t a = 0; a < s; ++a) term = mul(F, term, m.entry(rows[a], cols[perm[a]]));
    if (inversions % 2) term = negate(F, term);
    acc = add(F, acc, term, Homogeneity::Ignore);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Determinant of a scalar matrix by Gaussian elimination.
Fp scalar_det(const PrimeField& F, std::vector<std::vector<Fp>> a) {
  const std::size_t n = a.size();
  Fp det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].v == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c][c]);
    const Fp inv = F.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Fp f = F.mul(a[r][c], inv);
      for (std::size_t cc = c; cc < n; ++cc) a[r][cc] = F.sub(a[r][cc], F.mul(f, a[c][cc]));
    }
  }
  return det;
}

Subset without(std::size_t n, std::size_t skip) {
  Subset s;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) s.push_back(static_cast<std::uint8_t>(i));
  return s;
}

}  // namespace

TEST_CASE("random_linear_matrix") {
  const PrimeField F;
  const LinearMatrix a = random_linear_matrix(3, 4, F, 99), b = random_linear_matrix(3, 4, F, 99);
  CHECK(a.coeffs() == b.coeffs());
  CHECK(random_linear_matrix(4, 4, F, 1).coeffs().size() == 64);
  CHECK(a.coeffs() != random_linear_matrix(3, 4, F, 100).coeffs());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Polynomial& e = a.entry(i, j);
      CHECK(e.size() <= 4);
      CHECK(e.degree() == 1u);
      for (std::size_t t = 0; t < 4; ++t) CHECK(e.coefficient(Monomial::variable(4, t)) == a.coeff(t, i, j));
    }
  }
}

TEST_CASE("subset ranking") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t s = 0; s <= n; ++s) {
      const auto all = all_subsets(n, s);
      REQUIRE(all.size() == binomial(n, s));
      for (std::size_t r = 0; r < all.size(); ++r) {
        REQUIRE(subset_rank(all[r], n) == r);
        REQUIRE(subset_unrank(r, n, s) == all[r]);
      }
    }
  }
}

TEST_CASE("minors: 2x2 determinant") {
  const PrimeField F;
  const LinearMatrix m = random_linear_matrix(2, 3, F, 5);
  const DetSystem ds = minors(F, m, 2);
  REQUIRE(ds.size() == 1);
  const Polynomial expect =
      sub(F, mul(F, m.entry(0, 0), m.entry(1, 1)), mul(F, m.entry(0, 1), m.entry(1, 0)));
  CHECK(ds.gens[0] == expect);
}

TEST_CASE("minors: counts, degrees and flat order") {
  const PrimeField F;
  const LinearMatrix m = random_linear_matrix(4, 4, F, 1);
  const DetSystem ds = minors(F, m, 3);
  CHECK(ds.size() == 16);
  for (const Polynomial& g : ds.gens) CHECK(g.degree() == 3u);
  for (std::size_t f = 0; f < ds.size(); ++f) {
    CHECK(ds.index[f].flat == f);
    CHECK(ds.flat(ds.index[f].rows, ds.index[f].cols) == f);
  }
  // lexicographic on (rows, cols)
  for (std::size_t f = 1; f < ds.size(); ++f) {
    const auto& a = ds.index[f - 1];
    const auto& b = ds.index[f];
    CHECK((a.rows < b.rows || (a.rows == b.rows && a.cols < b.cols)));
  }
}

TEST_CASE("minors agree with Leibniz expansion") {
  const PrimeField F;
  for (std::size_t n = 2; n <= 4; ++n) {
    const LinearMatrix m = random_linear_matrix(n, 3, F, 10 + n);
    for (std::size_t s = 1; s <= n; ++s) {
      const DetSystem ds = minors(F, m, s);
      for (std::size_t f = 0; f < ds.size(); ++f) {
        REQUIRE(ds.gens[f] == leibniz(F, m, ds.index[f].rows, ds.index[f].cols));
      }
    }
  }
  const LinearMatrix m5 = random_linear_matrix(5, 2, F, 3);
  const Subset all = {0, 1, 2, 3, 4};
  CHECK(determinant(F, m5, all, all) == leibniz(F, m5, all, all));
}

TEST_CASE("minors agree with scalar determinants at random points") {
  const PrimeField F;
  Rng rng(77);
  const LinearMatrix m = random_linear_matrix(5, 4, F, 8);
  for (std::size_t s : {2, 3, 4}) {
    const DetSystem ds = minors(F, m, s);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Fp> pt(4);
      for (Fp& x : pt) x = rand_elem(F, rng);
      for (std::size_t f = 0; f < ds.size(); ++f) {
        std::vector<std::vector<Fp>> a(s, std::vector<Fp>(s));
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) a[i][j] = evaluate(F, m.entry(ds.index[f].rows[i], ds.index[f].cols[j]), pt);
        REQUIRE(evaluate(F, ds.gens[f], pt) == scalar_det(F, a));
      }
    }
  }
}

TEST_CASE("cofactors") {
  const PrimeField F;
  {
    const LinearMatrix m = random_linear_matrix(2, 4, F, 2);
    const auto C = cofactor_matrix(F, m);
    CHECK(C[0] == m.entry(1, 1));
    CHECK(C[1] == negate(F, m.entry(1, 0)));
    CHECK(C[2] == negate(F, m.entry(0, 1)));
    CHECK(C[3] == m.entry(0, 0));
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    const LinearMatrix m = random_linear_matrix(n, 4, F, 30 + n);
    const auto C = cofactor_matrix(F, m);
    const DetSystem ds = minors(F, m, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& g = ds.gens[ds.flat(without(n, i), without(n, j))];
        REQUIRE(C[i * n + j] == ((i + j) % 2 ? negate(F, g) : g));
      }
    }
    // tr(adj(M) M) = n det(M), adj(M)_{ij} = C_{ji}
    Polynomial tr(4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) tr = add(F, tr, mul(F, C[j * n + i], m.entry(j, i)), Homogeneity::Ignore);
    const Subset all = without(n + 1, n);
    CHECK(tr == scale(F, determinant(F, m, all, all), F.from_int(static_cast<std::int64_t>(n))));
  }
}

TEST_CASE("submatrices and minor_index_map") {
  const PrimeField F;
  const LinearMatrix m = random_linear_matrix(4, 4, F, 4);
  CHECK(submatrices(m, 3).size() == 16);
  const auto whole = submatrices(random_linear_matrix(3, 4, F, 4), 3);
  REQUIRE(whole.size() == 1);
  for (const auto& s : submatrices(m, 3)) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) REQUIRE(s.matrix.entry(a, b) == m.entry(s.rows[a], s.cols[b]));
  }

  const DetSystem ambient = minors(F, m, 2);
  {
    const Subset rows = {0, 1, 2}, cols = {0, 1, 3};
    const MinorIndex local{{0, 1}, {0, 1}, 0};
    const std::size_t g = minor_index_map(rows, cols, local, ambient);
    CHECK(ambient.index[g].rows == Subset{0, 1});
    CHECK(ambient.index[g].cols == Subset{0, 1});
  }
  {
    const Subset rows = {1, 2, 3}, cols = {0, 2, 3};
    const MinorIndex local{{1, 2}, {0, 2}, 0};
    const std::size_t g = minor_index_map(rows, cols, local, ambient);
    CHECK(ambient.index[g].rows == Subset{2, 3});
    CHECK(ambient.index[g].cols == Subset{0, 3});
  }
  // identity submatrix and round trip
  const Subset all = {0, 1, 2, 3};
  for (const MinorIndex& mi : ambient.index) CHECK(minor_index_map(all, all, mi, ambient) == mi.flat);
  for (const auto& s : submatrices(m, 3)) {
    const DetSystem local = minors(F, s.matrix, 2);
    for (const MinorIndex& mi : local.index) {
      const std::size_t g = minor_index_map(s.rows, s.cols, mi, ambient);
      REQUIRE(ambient.gens[g] == local.gens[mi.flat]);
    }
  }
  CHECK_THROWS_AS(minor_index_map(all, all, MinorIndex{{0, 1, 2}, {0, 1, 2}, 0}, ambient), DimensionError);
}

TEST_CASE("genericity guard") {
  const PrimeField F;
  const GenericDraw d = draw_generic(F, 4, 4, 2, 1);
  CHECK(d.report.passed);
  CHECK(d.report.generator_rank == 16);
  REQUIRE(d.report.next_rank.has_value());
  CHECK(*d.report.next_rank == *d.report.next_expected);

  // two equal rows
  const LinearMatrix base = random_linear_matrix(4, 4, F, 1);
  std::vector<Fp> coeffs = base.coeffs();
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t j = 0; j < 4; ++j) coeffs[(t * 4 + 1) * 4 + j] = coeffs[(t * 4 + 0) * 4 + j];
  const DetSystem bad = minors(F, LinearMatrix(4, 4, coeffs, 1), 3);
  CHECK_FALSE(genericity_check(F, bad).passed);
}
