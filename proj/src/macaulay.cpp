#include "detf5/macaulay.hpp"

#include <limits>

#include "detf5/errors.hpp"

namespace detf5 {

std::strong_ordering sig_cmp(const Signature& a, const Signature& b) {
  if (a.index != b.index) return a.index <=> b.index;
  return grevlex_cmp(a.tau, b.tau);
}

std::string to_string(const Signature& s) { return "(" + std::to_string(s.index + 1) + ", " + s.tau.to_string() + ")"; }

ColumnLayout::ColumnLayout(MonomialTable& table, std::size_t rank, unsigned degree)
    : rank_(rank), degree_(degree), basis_(&table.basis(degree)) {
  block_ = basis_->size();
}

ModuleMonomial ColumnLayout::monomial(std::uint32_t col) const {
  return ModuleMonomial{position(col), (*basis_)[mono_index(col)]};
}

SparseRow ColumnLayout::to_row(const ModuleElement& f) const {
  if (f.rank() != rank_) throw DimensionError("ColumnLayout::to_row: module rank mismatch");
  SparseRow out;
  for (std::size_t pos = rank_; pos-- > 0;) {
    for (const Term& t : f[pos].terms()) {
      if (t.mono.degree() != degree_) throw HomogeneityError("ColumnLayout::to_row: term of wrong degree");
      out.cols.push_back(column(pos, basis_->index_of(t.mono)));
      out.vals.push_back(t.coeff.v);
    }
  }
  return out;
}

ModuleElement ColumnLayout::to_element(const SparseRow& row) const {
  std::vector<std::vector<Term>> coords(rank_);
  for (std::size_t e = 0; e < row.nnz(); ++e) {
    coords[position(row.cols[e])].push_back({(*basis_)[mono_index(row.cols[e])], Fp{row.vals[e]}});
  }
  std::vector<Polynomial> polys;
  polys.reserve(rank_);
  const std::size_t k = basis_->monomials().empty() ? 0 : (*basis_)[0].nvars();
  for (auto& terms : coords) polys.push_back(Polynomial::from_sorted(k, std::move(terms)));
  return ModuleElement(std::move(polys), k);
}

SparseRow shift_row(const SparseRow& row, const ColumnLayout& from, const ColumnLayout& to,
                    std::span<const std::uint32_t> times_var, std::size_t nvars, std::size_t var) {
  SparseRow out;
  out.cols.resize(row.nnz());
  out.vals = row.vals;
  const std::size_t fb = from.block(), tb = to.block();
  for (std::size_t e = 0; e < row.nnz(); ++e) {
    const std::uint32_t c = row.cols[e];
    const std::size_t block = c / fb;
    out.cols[e] = static_cast<std::uint32_t>(block * tb + times_var[(c % fb) * nvars + var]);
  }
  return out;
}

SignatureEchelon::SignatureEchelon(const PrimeField& field, std::size_t ncols)
    : field_(field), ncols_(ncols), pivot_of_(ncols, -1), acc_(ncols, 0) {
  const std::uint64_t pm1 = field.modulus() - 1;
  axpy_budget_ = (std::numeric_limits<std::uint64_t>::max() - field.modulus()) / (pm1 * pm1 == 0 ? 1 : pm1 * pm1);
}

SparseRow SignatureEchelon::reduce(const SparseRow& row, const Signature* target) {
  SparseRow out;
  if (row.empty()) return out;
  const std::uint64_t p = field_.modulus();
  const std::uint32_t lo = row.cols.front();
  for (std::size_t e = 0; e < row.nnz(); ++e) acc_[row.cols[e]] = row.vals[e];
  std::uint64_t adds = 0;
  for (std::uint32_t c = lo; c < ncols_; ++c) {
    std::uint64_t v = acc_[c];
    if (v == 0) continue;
    v %= p;
    acc_[c] = v;
    if (v == 0) continue;
    const std::int64_t piv = pivot_of_[c];
    if (piv < 0) continue;
    if (adds == axpy_budget_) {
      for (std::uint32_t j = c + 1; j < ncols_; ++j) acc_[j] %= p;
      adds = 0;
    }
    const SparseRow& prow = rows_[static_cast<std::size_t>(piv)].row;
    const std::uint64_t coef = p - v;
    acc_[c] = 0;
    const std::size_t nnz = prow.nnz();
    const std::uint32_t* pc = prow.cols.data();
    const std::uint32_t* pv = prow.vals.data();
    for (std::size_t e = 1; e < nnz; ++e) acc_[pc[e]] += coef * pv[e];
    ++adds;
    ops_ += 2 * (nnz - 1);
    if (trace_ && target) trace_->push_back({*target, rows_[static_cast<std::size_t>(piv)].sig});
  }
  for (std::uint32_t c = lo; c < ncols_; ++c) {
    if (acc_[c] != 0) {
      out.cols.push_back(c);
      out.vals.push_back(static_cast<std::uint32_t>(acc_[c]));
      acc_[c] = 0;
    }
  }
  return out;
}

bool SignatureEchelon::insert(SignedRow row) {
  if (has_last_ && sig_cmp(row.sig, last_) <= 0) {
    throw ContractViolation("SignatureEchelon: signature " + to_string(row.sig) + " does not exceed " +
                            to_string(last_));
  }
  last_ = row.sig;
  has_last_ = true;
  SparseRow red = reduce(row.row, &row.sig);
  if (red.empty()) return false;
  if (red.vals.front() != 1) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t inv = field_.inv_raw(red.vals.front());
    for (auto& v : red.vals) v = static_cast<std::uint32_t>(v * inv % p);
    ops_ += red.nnz() + 1;
  }
  pivot_of_[red.cols.front()] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back({std::move(row.sig), std::move(red)});
  return true;
}

bool SignatureEchelon::reduces_to_zero(const SparseRow& row) { return reduce(row, nullptr).empty(); }

EchelonResult signature_echelon(const PrimeField& field, std::vector<SignedRow> rows, std::size_t ncols,
                                std::vector<TraceStep>* trace) {
  SignatureEchelon ech(field, ncols);
  ech.set_trace(trace);
  EchelonResult out;
  for (SignedRow& r : rows) {
    Signature sig = r.sig;
    if (!ech.insert(std::move(r))) out.zero_sigs.push_back(std::move(sig));
  }
  out.field_ops = ech.field_ops();
  out.rows = ech.take_pivots();
  return out;
}

std::vector<ModuleMonomial> pivot_leading_terms(const std::vector<SignedRow>& rows, const ColumnLayout& layout) {
  std::vector<ModuleMonomial> out;
  out.reserve(rows.size());
  for (const SignedRow& r : rows) out.push_back(layout.monomial(r.row.cols.front()));
  return out;
}

}  // namespace detf5
