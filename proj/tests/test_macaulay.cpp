#include <algorithm>

#include "detf5/errors.hpp"
#include "detf5/macaulay.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace detf5;
using testutil::var;

namespace {

Signature sig(std::uint32_t i, Monomial tau) { return Signature{i, std::move(tau)}; }

SparseRow random_row(const PrimeField& F, Rng& rng, std::size_t ncols, std::size_t density_pct) {
  SparseRow r;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (rng.below(100) >= density_pct) continue;
    const Fp v = rand_elem(F, rng);
    if (v.v == 0) continue;
    r.cols.push_back(c);
    r.vals.push_back(v.v);
  }
  return r;
}

std::vector<std::uint64_t> dense(const SparseRow& r, std::size_t ncols) {
  std::vector<std::uint64_t> out(ncols);
  for (std::size_t e = 0; e < r.nnz(); ++e) out[r.cols[e]] = r.vals[e];
  return out;
}

// Signatures (0, m) for the degree-2 monomials of 3 variables, ascending.
std::vector<Signature> ascending_sigs(std::size_t count) {
  std::vector<Signature> out;
  for (std::uint32_t i = 0; out.size() < count; ++i) {
    auto ms = monomials_of_degree(3, 2);
    std::reverse(ms.begin(), ms.end());
    for (const Monomial& m : ms) {
      if (out.size() == count) break;
      out.push_back(sig(i, m));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("signature order") {
  CHECK(sig_cmp(sig(0, Monomial{0, 3}), sig(1, Monomial{1, 0})) < 0);
  CHECK(sig_cmp(sig(1, Monomial{1, 0}), sig(1, Monomial{0, 1})) > 0);
  CHECK(sig_cmp(sig(2, Monomial{1, 1}), sig(2, Monomial{1, 1})) == 0);
  CHECK(to_string(sig(2, Monomial{1, 0, 1})) == "(3, x1*x3)");
}

TEST_CASE("column layout") {
  MonomialTable table(3);
  const ColumnLayout L(table, 2, 2);
  CHECK(L.size() == 12);
  CHECK(L.block() == 6);
  // column 0 is the POT-largest module monomial
  CHECK(L.monomial(0) == ModuleMonomial{1, Monomial{2, 0, 0}});
  CHECK(L.monomial(11) == ModuleMonomial{0, Monomial{0, 0, 2}});
  for (std::uint32_t c = 1; c < L.size(); ++c) CHECK(pot_cmp(L.monomial(c - 1), L.monomial(c)) > 0);

  const PrimeField F;
  const ModuleElement f({Polynomial::monomial(Monomial{0, 1, 1}, Fp{3}), Polynomial::monomial(Monomial{1, 0, 1}, Fp{5})}, 3);
  const SparseRow row = L.to_row(f);
  CHECK(L.monomial(row.cols.front()) == leading_term_pot(f).first);
  CHECK(L.to_element(row) == f);
  CHECK_THROWS_AS(L.to_row(ModuleElement(3, 3)), DimensionError);
}

TEST_CASE("shift_row matches multiplication by a variable") {
  MonomialTable table(3);
  const PrimeField F;
  Rng rng(1);
  const ColumnLayout from(table, 2, 2), to(table, 2, 3);
  for (int it = 0; it < 20; ++it) {
    const SparseRow r = random_row(F, rng, from.size(), 50);
    if (r.empty()) continue;
    const ModuleElement e = from.to_element(r);
    for (std::size_t v = 0; v < 3; ++v) {
      const SparseRow s = shift_row(r, from, to, table.times_var(2), 3, v);
      REQUIRE(std::is_sorted(s.cols.begin(), s.cols.end()));
      REQUIRE(to.to_element(s) == mono_mul(e, Monomial::variable(3, v)));
    }
  }
}

TEST_CASE("echelon: independent rows") {
  const PrimeField F;
  std::vector<SignedRow> rows;
  const auto sigs = ascending_sigs(4);
  for (std::uint32_t i = 0; i < 4; ++i) rows.push_back({sigs[i], SparseRow{{i, 5}, {1, 2}}});
  const EchelonResult res = signature_echelon(F, rows, 6);
  CHECK(res.zero_sigs.empty());
  CHECK(res.rows.size() == 4);
}

TEST_CASE("echelon: a duplicate row reduces to zero") {
  const PrimeField F;
  const auto sigs = ascending_sigs(3);
  std::vector<SignedRow> rows = {{sigs[0], SparseRow{{0, 2}, {3, 4}}},
                                 {sigs[1], SparseRow{{1, 2}, {1, 1}}},
                                 {sigs[2], SparseRow{{0, 2}, {6, 8}}}};
  const EchelonResult res = signature_echelon(F, rows, 3);
  REQUIRE(res.zero_sigs.size() == 1);
  CHECK(res.zero_sigs[0] == sigs[2]);
  CHECK(res.rows.size() == 2);
  CHECK(res.rows[0].row.vals[0] == 1u);  // normalized
}

TEST_CASE("echelon: signatures must increase") {
  const PrimeField F;
  SignatureEchelon ech(F, 3);
  CHECK(ech.insert({sig(1, Monomial{1, 0}), SparseRow{{0}, {1}}}));
  CHECK_THROWS_AS(ech.insert({sig(1, Monomial{0, 1}), SparseRow{{1}, {1}}}), ContractViolation);
  CHECK_THROWS_AS(ech.insert({sig(1, Monomial{1, 0}), SparseRow{{1}, {1}}}), ContractViolation);
  CHECK(ech.insert({sig(2, Monomial{0, 1}), SparseRow{{1}, {1}}}));
}

TEST_CASE("echelon: rank, reduction and content against brute force") {
  const PrimeField F;
  Rng rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t ncols = 8 + rng.below(10);
    const std::size_t nrows = 4 + rng.below(20);
    const auto sigs = ascending_sigs(nrows);
    std::vector<SignedRow> rows;
    std::vector<std::vector<std::uint64_t>> dense_rows;
    for (std::size_t i = 0; i < nrows; ++i) {
      SparseRow r = random_row(F, rng, ncols, 30);
      // some exact combinations of earlier rows
      if (i >= 2 && rng.below(3) == 0) {
        std::vector<std::uint64_t> d(ncols);
        for (std::size_t c = 0; c < ncols; ++c) d[c] = (dense_rows[i - 1][c] + 7 * dense_rows[i - 2][c]) % F.modulus();
        r = SparseRow{};
        for (std::uint32_t c = 0; c < ncols; ++c)
          if (d[c]) r.cols.push_back(c), r.vals.push_back(static_cast<std::uint32_t>(d[c]));
      }
      dense_rows.push_back(dense(r, ncols));
      rows.push_back({sigs[i], r});
    }
    std::vector<TraceStep> trace;
    const EchelonResult res = signature_echelon(F, rows, ncols, &trace);
    REQUIRE(res.rows.size() == testutil::dense_rank(dense_rows, F.modulus()));
    REQUIRE(res.rows.size() + res.zero_sigs.size() == nrows);
    for (const TraceStep& t : trace) REQUIRE(sig_cmp(t.source, t.target) < 0);

    std::vector<std::uint32_t> leaders;
    for (const SignedRow& p : res.rows) {
      REQUIRE(p.row.vals.front() == 1u);
      // fully reduced against earlier pivots
      for (std::uint32_t l : leaders) REQUIRE(!std::binary_search(p.row.cols.begin(), p.row.cols.end(), l));
      leaders.push_back(p.row.cols.front());
      // content: in the span of the inputs up to its own signature, but not below it
      std::vector<std::vector<std::uint64_t>> below, upto;
      for (std::size_t i = 0; i < nrows; ++i) {
        if (sig_cmp(sigs[i], p.sig) < 0) below.push_back(dense_rows[i]);
        if (sig_cmp(sigs[i], p.sig) <= 0) upto.push_back(dense_rows[i]);
      }
      const std::size_t r_upto = testutil::dense_rank(upto, F.modulus());
      upto.push_back(dense(p.row, ncols));
      REQUIRE(testutil::dense_rank(upto, F.modulus()) == r_upto);
      below.push_back(dense(p.row, ncols));
      const std::size_t r_below = testutil::dense_rank(below, F.modulus());
      below.pop_back();
      REQUIRE(r_below == testutil::dense_rank(below, F.modulus()) + 1);
    }
  }
}

TEST_CASE("echelon: reduces_to_zero leaves the pivots alone") {
  const PrimeField F;
  SignatureEchelon ech(F, 4);
  ech.insert({sig(0, Monomial{1}), SparseRow{{0, 1}, {1, 1}}});
  ech.insert({sig(1, Monomial{1}), SparseRow{{2}, {1}}});
  CHECK(ech.reduces_to_zero(SparseRow{{0, 1, 2}, {2, 2, 5}}));
  CHECK_FALSE(ech.reduces_to_zero(SparseRow{{0, 3}, {1, 1}}));
  CHECK(ech.rank() == 2);
  CHECK(ech.pivot_of(2) == 1);
  CHECK(ech.pivot_of(3) == -1);
}

TEST_CASE("pivot leading terms") {
  MonomialTable table(2);
  const ColumnLayout L(table, 1, 1);
  CHECK(pivot_leading_terms({}, L).empty());
  const PrimeField F;
  const ModuleElement f({add(F, var(2, 0), var(2, 1))}, 2);
  const EchelonResult res = signature_echelon(F, {{sig(0, Monomial{0, 0}), L.to_row(f)}}, L.size());
  const auto lts = pivot_leading_terms(res.rows, L);
  REQUIRE(lts.size() == res.rows.size());
  CHECK(lts[0] == ModuleMonomial{0, Monomial{1, 0}});
}
