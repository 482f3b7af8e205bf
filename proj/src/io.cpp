#include "detf5/io.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace detf5 {

using nlohmann::json;

std::string instance_to_json(const Instance& inst, bool with_coeffs, int indent) {
  const LinearMatrix& m = inst.matrix;
  json j;
  j["p"] = inst.p;
  j["n"] = m.n();
  j["k"] = m.k();
  j["r"] = inst.r;
  j["seed"] = m.seed();
  if (with_coeffs) {
    json coeffs = json::array();
    for (std::size_t t = 0; t < m.k(); ++t) {
      json mat = json::array();
      for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.n(); ++c) row.push_back(m.coeff(t, i, c).v);
        mat.push_back(std::move(row));
      }
      coeffs.push_back(std::move(mat));
    }
    j["coeffs"] = std::move(coeffs);
  }
  return j.dump(indent);
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
  try {
    Instance inst;
    inst.p = j.value("p", PrimeField::kDefaultPrime);
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    inst.r = j.at("r").get<std::size_t>();
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    const PrimeField field(inst.p);
    if (!j.contains("coeffs")) {
      inst.matrix = random_linear_matrix(n, k, field, seed);
      return inst;
    }
    const json& c = j.at("coeffs");
    if (c.size() != k) throw std::invalid_argument("instance: coeffs must have k slices");
    std::vector<Fp> coeffs;
    coeffs.reserve(k * n * n);
    for (const json& mat : c) {
      if (mat.size() != n) throw std::invalid_argument("instance: each coefficient slice must have n rows");
      for (const json& row : mat) {
        if (row.size() != n) throw std::invalid_argument("instance: each coefficient row must have n entries");
        for (const json& v : row) coeffs.push_back(field.from_int(v.get<std::int64_t>()));
      }
    }
    inst.matrix = LinearMatrix(n, k, std::move(coeffs), seed);
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
}

void write_basis_text(std::ostream& os, const GroebnerBasis& gb) {
  for (const ModuleElement& e : gb.elements) os << (gb.rank == 1 ? e[0].to_string() : e.to_string()) << '\n';
}

std::string basis_to_json(const GroebnerBasis& gb, int indent) {
  json j;
  j["rank"] = gb.rank;
  j["nvars"] = gb.nvars;
  j["degree_bound"] = gb.degree_bound;
  j["reduced"] = gb.reduced;
  j["max_degree"] = gb.max_degree();
  json elems = json::array();
  for (const ModuleElement& e : gb.elements) elems.push_back(gb.rank == 1 ? e[0].to_string() : e.to_string());
  j["elements"] = std::move(elems);
  return j.dump(indent);
}

void write_stats_json_lines(std::ostream& os, const RunStats& stats, const std::string& phase) {
  // zero_sigs are stored in step order, s.zeros of them per step.
  std::size_t next = 0;
  for (const StepStats& s : stats.steps) {
    json zs = json::array();
    for (std::size_t z = 0; z < s.zeros && next < stats.zero_sigs.size(); ++z) zs.push_back(to_string(stats.zero_sigs[next++]));
    json j = {{"phase", phase},   {"d", s.degree},          {"i", s.index + 1},
              {"rows", s.rows},   {"new_rows", s.new_rows}, {"rank", s.rank},
              {"zeros", s.zeros}, {"blocked_syz", s.blocked_syz}, {"blocked_f5", s.blocked_f5},
              {"zero_signatures", std::move(zs)}};
    os << j.dump() << '\n';
  }
}

std::string stats_summary_json(const RunStats& stats, int indent) {
  json j;
  j["reductions_to_zero"] = stats.reductions_to_zero();
  j["rows"] = stats.rows_total();
  j["field_ops"] = stats.field_ops;
  j["seconds"] = stats.seconds;
  json per = json::object();
  for (const StepStats& s : stats.steps) {
    const std::string key = std::to_string(s.degree);
    per[key] = per.value(key, 0) + static_cast<int>(s.zeros);
  }
  j["zeros_by_degree"] = std::move(per);
  json zs = json::array();
  for (const Signature& z : stats.zero_sigs) zs.push_back(to_string(z));
  j["zero_signatures"] = std::move(zs);
  return j.dump(indent);
}

void write_stats_csv(std::ostream& os, const RunStats& stats) {
  os << "d,i,rows,new_rows,rank,zeros,blocked_syz,blocked_f5\n";
  for (const StepStats& s : stats.steps) {
    os << s.degree << ',' << s.index + 1 << ',' << s.rows << ',' << s.new_rows << ',' << s.rank << ',' << s.zeros
       << ',' << s.blocked_syz << ',' << s.blocked_f5 << '\n';
  }
}

std::string syzygies_to_json(const SyzygyBasis& basis, int indent) {
  json out = json::array();
  for (const Syzygy& s : basis.syzygies) {
    json coords = json::object();
    for (std::size_t pos = 0; pos < s.elem.rank(); ++pos) {
      const Polynomial& p = s.elem[pos];
      if (p.is_zero()) continue;
      json c = json::array();
      for (std::size_t v = 0; v < basis.nvars; ++v) c.push_back(p.coefficient(Monomial::variable(basis.nvars, v)).v);
      coords[std::to_string(pos)] = std::move(c);
    }
    out.push_back({{"tag", s.tag}, {"coords", std::move(coords)}});
  }
  return out.dump(indent);
}

}  // namespace detf5
