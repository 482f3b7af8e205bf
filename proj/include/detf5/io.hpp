#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "detf5/detsys.hpp"
#include "detf5/f5.hpp"
#include "detf5/syzygy.hpp"

namespace detf5 {

struct Instance {
  std::uint32_t p = PrimeField::kDefaultPrime;
  std::size_t r = 0;
  LinearMatrix matrix;
};

/// {"p","n","k","r","seed","coeffs"} with coeffs[t][i][j] = a_t^{(i,j)}.
std::string instance_to_json(const Instance& inst, bool with_coeffs = true, int indent = -1);
/// Missing "coeffs" are regenerated from "seed". Throws std::invalid_argument
/// on malformed input.
Instance instance_from_json(const std::string& text);

/// One polynomial per line.
void write_basis_text(std::ostream& os, const GroebnerBasis& gb);
std::string basis_to_json(const GroebnerBasis& gb, int indent = -1);

/// One JSON object per Macaulay matrix.
void write_stats_json_lines(std::ostream& os, const RunStats& stats, const std::string& phase = "main");
std::string stats_summary_json(const RunStats& stats, int indent = -1);
void write_stats_csv(std::ostream& os, const RunStats& stats);

/// Each syzygy as {"tag", "coords": {flat: [c_1..c_k]}} for linear coordinates.
std::string syzygies_to_json(const SyzygyBasis& basis, int indent = -1);

}  // namespace detf5
