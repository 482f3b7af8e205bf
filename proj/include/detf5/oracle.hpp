#pragma once

#include <cstddef>
#include <vector>

#include "detf5/f5.hpp"
#include "detf5/gf.hpp"
#include "detf5/polynomial.hpp"

namespace detf5 {

struct BuchbergerLimits {
  std::size_t max_pairs = 2'000'000;
  std::size_t max_basis = 5'000;
};

Polynomial s_polynomial(const PrimeField& field, const Polynomial& f, const Polynomial& g);

/// Plain Buchberger: every pair is reduced, smallest lcm degree first, no
/// criteria and no signatures. Returns the reduced basis. Throws
/// OracleTooLarge when a limit is hit.
GroebnerBasis buchberger(const PrimeField& field, const std::vector<Polynomial>& F, const BuchbergerLimits& limits = {});

/// Whether s lies in the submodule generated by gens. All gens must be
/// homogeneous; only their multiples of degree deg(s) are used, so the
/// answer is exact. Throws OracleTooLarge when the linear system would
/// exceed max_rows.
bool module_membership(const PrimeField& field, const ModuleElement& s, const std::vector<ModuleElement>& gens,
                       std::size_t max_rows = 200'000);

}  // namespace detf5
