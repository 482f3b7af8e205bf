#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detf5/gf.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

/// Two readings of the closed-form Hilbert function of the corank-one ideal
/// in four variables. FourTerm subtracts an extra C(d-r-1, 3); the rank
/// oracle rules it out, so ThreeTerm is the default everywhere.
enum class HilbertVariant { ThreeTerm, FourTerm };

/// dim_k of the degree-d part of the ideal of (n-1)-minors of a generic
/// n x n matrix of linear forms in 4 variables. Zero below degree n-1; past
/// degree 2n-3 it is capped by the number of monomials.
std::uint64_t hilbert_coeff(std::size_t n, unsigned d, HilbertVariant variant = HilbertVariant::ThreeTerm);

/// r(n-r)+1, the largest degree in the reduced grevlex basis of a generic
/// instance. Equals 2n-3 when r = n-2.
unsigned expected_gb_maxdeg(std::size_t n, std::size_t r);

struct RankPrediction {
  unsigned degree = 0;
  std::uint64_t predicted_rank = 0;
  std::uint64_t column_count = 0;
};

/// Predicted Macaulay ranks for n-1 <= d <= 2n-3 (k = 4).
std::vector<RankPrediction> rank_predictions(std::size_t n, HilbertVariant variant = HilbertVariant::ThreeTerm);

/// Rank of the plain degree-d Macaulay matrix of F: every monomial multiple,
/// no signatures, no criteria.
std::size_t rank_oracle(const PrimeField& field, const std::vector<Polynomial>& F, unsigned d);

}  // namespace detf5
