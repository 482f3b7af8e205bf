#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "detf5/detsys.hpp"
#include "detf5/gf.hpp"
#include "detf5/macaulay.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

/// How known syzygy leads and zero rows block signatures.
///  Divisibility: (i, sigma) is blocked when a known lead tau e_i, or the
///    signature of an earlier zero row (i, tau), has tau | sigma. Leads
///    persist across degrees.
///  Literal: Crit is rebuilt every degree from the exact leads of S plus
///    the one-step children of last degree's zero rows; anything else is
///    left to the parent tree (a blocked row has no children).
enum class CriterionMode { Divisibility, Literal };

struct F5Config {
  bool use_f5_criterion = true;  // only meaningful for ideals (rank 1)
  CriterionMode criterion = CriterionMode::Divisibility;
  bool abort_on_zero = false;    // throw NonGenericInstance on a zero row
  bool collect_trace = false;    // record (target, source) of every row addition
  bool verify_blocked = false;   // reduce every blocked row anyway; must vanish
  bool build_basis = true;
};

/// Counters for one Macaulay matrix M_{d,i}.
struct StepStats {
  unsigned degree = 0;
  std::uint32_t index = 0;     // 0-based generator index
  std::size_t rows = 0;        // rows of M_{d,i}: rank of M_{d,i-1} plus new rows
  std::size_t new_rows = 0;
  std::size_t zeros = 0;
  std::size_t rank = 0;
  std::size_t blocked_syz = 0;
  std::size_t blocked_f5 = 0;
};

struct RunStats {
  std::vector<StepStats> steps;
  std::vector<Signature> zero_sigs;
  std::vector<TraceStep> trace;
  std::uint64_t field_ops = 0;
  double seconds = 0;
  std::size_t blocked_checked = 0;
  std::size_t blocked_nonzero = 0;  // blocked rows that did not reduce to zero

  std::size_t reductions_to_zero() const noexcept;
  std::size_t zeros_in_degree(unsigned d) const noexcept;
  std::size_t rows_total() const noexcept;
  /// Rank of M_{d,l}, the last matrix of degree d; 0 if absent.
  std::size_t final_rank(unsigned d) const noexcept;
  std::size_t final_rows(unsigned d) const noexcept;
};

struct GroebnerBasis {
  std::size_t rank = 1;
  std::size_t nvars = 0;
  unsigned degree_bound = 0;
  bool reduced = false;
  std::vector<ModuleElement> elements;

  /// Coordinates of a rank-1 basis.
  std::vector<Polynomial> polynomials() const;
  std::vector<ModuleMonomial> leading_terms() const;
  unsigned max_degree() const noexcept;
};

struct F5Result {
  GroebnerBasis basis;
  RunStats stats;
};

/// Matrix-F5 over a free module of rank t with POT order. F must be
/// homogeneous and sorted by degree; syz_leads are the POT leading terms
/// tau e_i of known syzygies (position i = generator index).
F5Result matrix_f5(const PrimeField& field, const std::vector<ModuleElement>& F, unsigned D,
                   const std::vector<ModuleMonomial>& syz_leads, const F5Config& cfg = {});

/// Rank-1 wrapper.
F5Result matrix_f5(const PrimeField& field, const std::vector<Polynomial>& F, unsigned D,
                   const std::vector<ModuleMonomial>& syz_leads, const F5Config& cfg = {});

/// Matrix-F5 with no known syzygies: the baseline whose zero rows are counted.
F5Result standard_f5(const PrimeField& field, const std::vector<Polynomial>& F, unsigned D, const F5Config& cfg = {});

std::vector<ModuleMonomial> leading_terms(const std::vector<ModuleElement>& elems);

struct PhaseStats {
  std::string name;
  RunStats stats;
  std::size_t basis_size = 0;
};

struct DetF5Result {
  GroebnerBasis basis;
  RunStats stats;                   // the final phase on the minors
  std::vector<PhaseStats> phases;   // syzygy phases, in run order
  std::uint64_t total_field_ops() const noexcept;
};

/// Syzygies of every (r+2)-submatrix, their degree-1 basis, then matrix-F5
/// on the minors with those leads.
DetF5Result det_f5(const PrimeField& field, const DetSystem& ds, unsigned D, const F5Config& cfg = {});

/// Corank one: bases of the second and first syzygy modules up to degrees
/// D-n and D-n+1, then matrix-F5 on the minors. Any zero row throws
/// NonGenericInstance.
DetF5Result det_f5_corank_one(const PrimeField& field, const DetSystem& ds, unsigned D, const F5Config& cfg = {});

/// Minimal reduced basis of a rank-1 D-Groebner basis: monic, leading
/// monomials pairwise non-divisible, tails fully reduced.
GroebnerBasis interreduce(const PrimeField& field, const GroebnerBasis& G);

/// Full normal form of f modulo a list of polynomials (no order requirement
/// on the list).
Polynomial normal_form(const PrimeField& field, Polynomial f, const std::vector<Polynomial>& G);

}  // namespace detf5
