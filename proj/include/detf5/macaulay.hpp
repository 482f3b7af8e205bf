#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "detf5/gf.hpp"
#include "detf5/monomial.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

/// Row label (index, tau): the row stands for tau * f_index. Index is 0-based.
struct Signature {
  std::uint32_t index = 0;
  Monomial tau;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// (j', tau') < (j, tau) iff j' < j, or j' = j and tau' < tau in grevlex.
std::strong_ordering sig_cmp(const Signature& a, const Signature& b);
/// Printable form with a 1-based index, e.g. "(3, x1*x4)".
std::string to_string(const Signature& s);

/// Sparse row: strictly increasing column indices, nonzero values in [0, p).
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> vals;

  bool empty() const noexcept { return cols.empty(); }
  std::size_t nnz() const noexcept { return cols.size(); }
};

struct SignedRow {
  Signature sig;
  SparseRow row;
};

/// Columns of the degree-d Macaulay matrix for a module of rank t: blocks by
/// position from the largest down, grevlex-decreasing inside a block. Column
/// 0 is the POT-largest module monomial, so a row's first entry is its
/// leading term.
class ColumnLayout {
 public:
  ColumnLayout(MonomialTable& table, std::size_t rank, unsigned degree);

  std::size_t rank() const noexcept { return rank_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return rank_ * block_; }
  std::size_t block() const noexcept { return block_; }

  std::uint32_t column(std::size_t position, std::uint32_t mono_idx) const noexcept {
    return static_cast<std::uint32_t>((rank_ - 1 - position) * block_ + mono_idx);
  }
  std::size_t position(std::uint32_t col) const noexcept { return rank_ - 1 - col / block_; }
  std::uint32_t mono_index(std::uint32_t col) const noexcept { return static_cast<std::uint32_t>(col % block_); }
  ModuleMonomial monomial(std::uint32_t col) const;
  const DegreeBasis& basis() const noexcept { return *basis_; }

  SparseRow to_row(const ModuleElement& f) const;
  ModuleElement to_element(const SparseRow& row) const;

 private:
  std::size_t rank_;
  unsigned degree_;
  std::size_t block_;
  const DegreeBasis* basis_;
};

/// Row of x_var * f one degree up; column order is preserved because
/// multiplying by a variable is monotone in grevlex.
SparseRow shift_row(const SparseRow& row, const ColumnLayout& from, const ColumnLayout& to,
                    std::span<const std::uint32_t> times_var, std::size_t nvars, std::size_t var);

struct TraceStep {
  Signature target;
  Signature source;
};

/// Incremental signature-respecting echelon form. Rows must arrive in
/// strictly increasing signature order; each is fully reduced against the
/// pivots already present (all of smaller signature) and, when nonzero,
/// normalized and kept as a new pivot. Pivots are never touched again.
class SignatureEchelon {
 public:
  SignatureEchelon(const PrimeField& field, std::size_t ncols);

  /// True when the row survives as a pivot, false when it reduced to zero.
  /// Throws ContractViolation when sig is not larger than every earlier one.
  bool insert(SignedRow row);

  /// Reduces a copy without inserting it.
  bool reduces_to_zero(const SparseRow& row);

  const std::vector<SignedRow>& pivots() const noexcept { return rows_; }
  std::vector<SignedRow> take_pivots() { return std::move(rows_); }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }
  /// Pivot row owning column c, or -1.
  std::int64_t pivot_of(std::uint32_t c) const noexcept { return pivot_of_[c]; }

  std::uint64_t field_ops() const noexcept { return ops_; }
  void set_trace(std::vector<TraceStep>* trace) noexcept { trace_ = trace; }

 private:
  // Reduces `row` in the accumulator; returns the reduced sparse row.
  SparseRow reduce(const SparseRow& row, const Signature* target);

  const PrimeField& field_;
  std::size_t ncols_;
  std::vector<SignedRow> rows_;
  std::vector<std::int64_t> pivot_of_;
  std::vector<std::uint64_t> acc_;
  std::uint64_t ops_ = 0;
  std::uint64_t axpy_budget_;
  bool has_last_ = false;
  Signature last_;
  std::vector<TraceStep>* trace_ = nullptr;
};

struct EchelonResult {
  std::vector<SignedRow> rows;
  std::vector<Signature> zero_sigs;
  std::uint64_t field_ops = 0;
};

/// One-shot form: rows sorted ascending by signature.
EchelonResult signature_echelon(const PrimeField& field, std::vector<SignedRow> rows, std::size_t ncols,
                                std::vector<TraceStep>* trace = nullptr);

/// Leading module monomials of the pivot rows.
std::vector<ModuleMonomial> pivot_leading_terms(const std::vector<SignedRow>& rows, const ColumnLayout& layout);

}  // namespace detf5
