#include <sstream>

#include "detf5/f5.hpp"
#include "detf5/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace detf5;

TEST_CASE("instance JSON round trip") {
  const PrimeField F;
  Instance inst;
  inst.r = 2;
  inst.matrix = random_linear_matrix(4, 4, F, 17);
  const std::string text = instance_to_json(inst);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["coeffs"].size() == 4);
  CHECK(j["coeffs"][0].size() == 4);
  CHECK(j["coeffs"][0][0].size() == 4);
  const Instance back = instance_from_json(text);
  CHECK(back.r == 2);
  CHECK(back.matrix.coeffs() == inst.matrix.coeffs());
  CHECK(instance_to_json(back) == text);

  // coefficients regenerated from the seed when absent
  const Instance regen = instance_from_json(instance_to_json(inst, false));
  CHECK(regen.matrix.coeffs() == inst.matrix.coeffs());
}

TEST_CASE("instance JSON errors") {
  CHECK_THROWS_AS(instance_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"n": 2, "k": 1, "r": 0, "coeffs": [[[1, 2]]]})"), std::invalid_argument);
}

TEST_CASE("stats and syzygy export") {
  const PrimeField F;
  const DetSystem ds = minors(F, random_linear_matrix(4, 4, F, 1), 3);
  const F5Result res = standard_f5(F, ds.gens, 5);
  std::ostringstream lines;
  write_stats_json_lines(lines, res.stats);
  std::size_t count = 0, zeros = 0;
  std::istringstream in(lines.str());
  for (std::string line; std::getline(in, line); ++count) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["zero_signatures"].size() == j["zeros"].get<std::size_t>());
    zeros += j["zeros"].get<std::size_t>();
  }
  CHECK(count == res.stats.steps.size());
  CHECK(zeros == 56);
  const auto summary = nlohmann::json::parse(stats_summary_json(res.stats));
  CHECK(summary["reductions_to_zero"] == 56);
  CHECK(summary["zeros_by_degree"]["4"] == 30);

  std::ostringstream csv;
  write_stats_csv(csv, res.stats);
  CHECK(csv.str().rfind("d,i,rows,new_rows,rank,zeros,blocked_syz,blocked_f5\n", 0) == 0);

  const auto syz = nlohmann::json::parse(syzygies_to_json(syz_corank_one(F, ds)));
  CHECK(syz.size() == 30);
  CHECK(syz[0]["tag"] == "I(1,2)");
  for (const auto& [pos, c] : syz[0]["coords"].items()) CHECK(c.size() == 4);
}
