#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detf5/detsys.hpp"
#include "detf5/errors.hpp"
#include "detf5/f5.hpp"
#include "detf5/hilbert.hpp"
#include "detf5/io.hpp"
#include "detf5/syzygy.hpp"
#include "json.hpp"

using namespace detf5;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonGeneric = 2;

struct InstanceOpts {
  std::size_t n = 4;
  std::size_t k = 4;
  std::optional<std::size_t> r;
  std::uint64_t seed = 1;
  std::uint32_t p = PrimeField::kDefaultPrime;
  std::string instance_path;
};

void add_instance_opts(CLI::App* app, InstanceOpts& o, bool allow_file = true) {
  app->add_option("--n", o.n, "matrix size")->check(CLI::Range(2, 64));
  app->add_option("--k", o.k, "number of variables")->check(CLI::Range(1, 64));
  app->add_option("--r", o.r, "rank bound; minors have size r+1 (default n-2)");
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--p", o.p, "prime modulus < 2^31");
  if (allow_file) app->add_option("--instance", o.instance_path, "instance JSON (overrides --n/--k/--r/--seed/--p)");
}

Instance load_instance(const InstanceOpts& o) {
  if (!o.instance_path.empty()) {
    std::ifstream in(o.instance_path);
    if (!in) throw std::runtime_error("cannot open " + o.instance_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
  }
  const std::size_t r = o.r.value_or(o.n >= 2 ? o.n - 2 : 0);
  if (r + 1 > o.n) throw std::invalid_argument("r must be at most n-1");
  Instance inst;
  inst.p = o.p;
  inst.r = r;
  inst.matrix = random_linear_matrix(o.n, o.k, PrimeField(o.p), o.seed);
  return inst;
}

// Writes to the file if a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

CriterionMode parse_criterion(const std::string& s) {
  return s == "literal" ? CriterionMode::Literal : CriterionMode::Divisibility;
}

std::vector<std::string> affine_strings(const PrimeField& field, const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const Polynomial& p : gb.polynomials()) out.push_back(dehomogenize(field, p, gb.nvars - 1).to_string());
  return out;
}

int cmd_gen(const InstanceOpts& o, const std::string& out_path) {
  Instance inst = load_instance(o);
  const PrimeField field(inst.p);
  const DetSystem ds = minors(field, inst.matrix, inst.r + 1);
  const GuardReport guard = genericity_check(field, ds);
  Sink sink(out_path);
  sink.os() << instance_to_json(inst, true, 2) << '\n';
  std::cerr << "guard: " << (guard.passed ? "pass" : "FAIL") << " (" << guard.message << ")\n";
  if (!guard.passed) {
    std::cerr << "instance is not generic; retry with --seed " << inst.matrix.seed() + 1 << '\n';
    return kExitNonGeneric;
  }
  return kExitOk;
}

struct GbOpts {
  std::string algo = "det-corank1";
  std::optional<unsigned> D;
  std::string out;
  std::string format = "txt";
  std::string trace;
  std::string criterion = "divisibility";
  bool affine = false;
  bool verify_blocked = false;
};

int cmd_gb(const InstanceOpts& o, const GbOpts& g) {
  Instance inst = load_instance(o);
  const PrimeField field(inst.p);
  const std::size_t n = inst.matrix.n();
  const DetSystem ds = minors(field, inst.matrix, inst.r + 1);
  const unsigned D = g.D ? *g.D : expected_gb_maxdeg(n, inst.r);
  if (D < inst.r + 1) std::cerr << "warning: degree bound " << D << " is below the generator degree " << inst.r + 1 << '\n';

  F5Config cfg;
  cfg.criterion = parse_criterion(g.criterion);
  cfg.verify_blocked = g.verify_blocked;
  GroebnerBasis basis;
  RunStats main_stats;
  std::vector<PhaseStats> phases;
  if (g.algo == "std") {
    F5Result res = standard_f5(field, ds.gens, D, cfg);
    basis = std::move(res.basis);
    main_stats = std::move(res.stats);
  } else {
    DetF5Result res = g.algo == "det" ? det_f5(field, ds, D, cfg) : det_f5_corank_one(field, ds, D, cfg);
    basis = std::move(res.basis);
    main_stats = std::move(res.stats);
    phases = std::move(res.phases);
  }
  basis = interreduce(field, basis);

  if (!g.trace.empty()) {
    std::ofstream tr(g.trace);
    for (const PhaseStats& ph : phases) write_stats_json_lines(tr, ph.stats, ph.name);
    write_stats_json_lines(tr, main_stats, "minors");
  }

  Sink sink(g.out);
  if (g.format == "json") {
    nlohmann::json j;
    j["algo"] = g.algo;
    j["basis"] = nlohmann::json::parse(basis_to_json(basis));
    if (g.affine) j["affine"] = affine_strings(field, basis);
    j["stats"] = nlohmann::json::parse(stats_summary_json(main_stats));
    nlohmann::json ph = nlohmann::json::array();
    for (const PhaseStats& p : phases) {
      ph.push_back({{"name", p.name},
                    {"basis_size", p.basis_size},
                    {"stats", nlohmann::json::parse(stats_summary_json(p.stats))}});
    }
    j["phases"] = std::move(ph);
    sink.os() << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    write_stats_csv(sink.os(), main_stats);
  } else if (g.affine) {
    for (const std::string& line : affine_strings(field, basis)) sink.os() << line << '\n';
  } else {
    write_basis_text(sink.os(), basis);
  }
  std::uint64_t ops = main_stats.field_ops;
  for (const PhaseStats& p : phases) {
    std::cerr << p.name << ": " << p.stats.reductions_to_zero() << " reductions to zero, basis size " << p.basis_size
              << '\n';
    ops += p.stats.field_ops;
  }
  std::cerr << "algo " << g.algo << ", D = " << D << ": " << basis.elements.size() << " elements, max degree "
            << basis.max_degree() << ", " << main_stats.reductions_to_zero() << " reductions to zero, " << ops
            << " field ops\n";
  if (main_stats.blocked_nonzero > 0) std::cerr << "warning: " << main_stats.blocked_nonzero << " blocked rows were nonzero\n";
  return kExitOk;
}

int cmd_syz(const InstanceOpts& o, const std::string& out_path, const std::string& format, bool second) {
  Instance inst = load_instance(o);
  const PrimeField field(inst.p);
  const DetSystem ds = minors(field, inst.matrix, inst.r + 1);
  const bool corank_one = inst.r + 2 == inst.matrix.n();
  const SyzygyBasis basis =
      second ? syz2_corank_one(field, ds) : (corank_one ? syz_corank_one(field, ds) : syz_gen(field, ds));
  Sink sink(out_path);
  if (format == "json") {
    sink.os() << syzygies_to_json(basis, 2) << '\n';
  } else {
    for (const Syzygy& s : basis.syzygies) sink.os() << s.tag << '\t' << s.elem.to_string() << '\n';
  }
  std::cerr << basis.size() << " syzygies\n";
  return kExitOk;
}

struct BenchRowSpec {
  std::size_t n, r, k;
};

std::vector<BenchRowSpec> default_grid() {
  std::vector<BenchRowSpec> rows;
  for (std::size_t n = 4; n <= 20; ++n) rows.push_back({n, n - 2, 4});
  const BenchRowSpec higher[] = {{4, 1, 9},  {5, 2, 9},  {6, 3, 9},  {7, 4, 9},  {8, 5, 9},  {9, 6, 9},
                                 {5, 1, 16}, {6, 2, 16}, {7, 3, 16}, {6, 1, 25}, {7, 2, 25}, {7, 1, 36}};
  rows.insert(rows.end(), std::begin(higher), std::end(higher));
  return rows;
}

std::vector<BenchRowSpec> parse_rows(const std::string& text) {
  std::vector<BenchRowSpec> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    BenchRowSpec row{};
    char c1 = 0, c2 = 0;
    std::stringstream is(item);
    if (!(is >> row.n >> c1 >> row.r >> c2 >> row.k) || c1 != ',' || c2 != ',') {
      throw std::invalid_argument("bad row '" + item + "', expected n,r,k");
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_count(const std::vector<std::size_t>& values) {
  std::size_t sum = 0;
  for (std::size_t v : values) sum += v;
  if (sum % values.size() == 0) return std::to_string(sum / values.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(sum) / static_cast<double>(values.size()));
  return buf;
}

int cmd_bench(const std::vector<BenchRowSpec>& rows, unsigned trials, std::uint64_t seed0, std::uint32_t p,
              const std::string& out_path, std::size_t max_n) {
  const PrimeField field(p);
  Sink sink(out_path);
  sink.os() << "n,r,k,D,red_std,red_det,seed\n";
  sink.os().flush();
  bool all_ok = true;
  for (const BenchRowSpec& row : rows) {
    if (row.n > max_n) continue;
    const unsigned D = row.r + 2 == row.n ? 2 * row.n - 3 : row.r + 2;
    std::vector<std::size_t> red_std, red_det;
    std::uint64_t first_seed = 0;
    std::string error;
    for (unsigned t = 0; t < trials && error.empty(); ++t) {
      try {
        const auto t0 = std::chrono::steady_clock::now();
        GenericDraw draw = draw_generic(field, row.n, row.k, row.r, seed0 + t * 1000);
        if (t == 0) first_seed = draw.seed;
        F5Config cfg;
        cfg.build_basis = false;
        red_std.push_back(standard_f5(field, draw.system.gens, D, cfg).stats.reductions_to_zero());
        const DetF5Result det = row.r + 2 == row.n ? det_f5_corank_one(field, draw.system, D, cfg)
                                                   : det_f5(field, draw.system, D, cfg);
        red_det.push_back(det.stats.reductions_to_zero());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "row (" << row.n << ',' << row.r << ',' << row.k << ") trial " << t << ": " << secs << " s\n";
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    if (!error.empty()) {
      all_ok = false;
      std::cerr << "row (" << row.n << ',' << row.r << ',' << row.k << ") failed: " << error << '\n';
      continue;
    }
    for (std::size_t t = 1; t < red_std.size(); ++t) {
      if (red_std[t] != red_std[0] || red_det[t] != red_det[0]) {
        std::cerr << "row (" << row.n << ',' << row.r << ',' << row.k
                  << ") counts differ across seeds; some draw is degenerate\n";
        break;
      }
    }
    sink.os() << row.n << ',' << row.r << ',' << row.k << ',' << D << ',' << format_count(red_std) << ','
              << format_count(red_det) << ',' << first_seed << '\n';
    sink.os().flush();
  }
  return all_ok ? kExitOk : kExitNonGeneric;
}

int cmd_verify(const InstanceOpts& o) {
  Instance inst = load_instance(o);
  const PrimeField field(inst.p);
  const std::size_t n = inst.matrix.n();
  if (inst.r + 2 != n) throw WrongCorank("verify: requires r = n-2");
  const DetSystem ds = minors(field, inst.matrix, inst.r + 1);
  bool all = true;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all = all && ok;
  };

  const SyzygyBasis syz = syz_corank_one(field, ds);
  report("(a) syzygy count", syz.size() == 2 * n * n - 2,
         std::to_string(syz.size()) + " of " + std::to_string(2 * n * n - 2));

  std::size_t invalid = 0;
  for (const Syzygy& s : syz.syzygies) {
    Polynomial acc = Polynomial::constant(ds.matrix.k(), Fp{0});
    for (std::size_t pos = 0; pos < s.elem.rank(); ++pos) {
      if (!s.elem[pos].is_zero()) acc = add(field, acc, mul(field, s.elem[pos], ds.gens[pos]), Homogeneity::Ignore);
    }
    if (!acc.is_zero()) ++invalid;
  }
  report("(b) syzygy validity", invalid == 0, std::to_string(invalid) + " syzygies do not vanish");

  // Zero minors span nothing; degenerate instances have some.
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : ds.gens)
    if (!g.is_zero()) nonzero.push_back(g);

  if (ds.matrix.k() != 4) {
    report("(c) Hilbert ranks", false, "closed form needs k = 4");
  } else {
    std::string bad;
    for (const RankPrediction& pr : rank_predictions(n)) {
      const std::size_t got = rank_oracle(field, nonzero, pr.degree);
      if (got != pr.predicted_rank) {
        bad += " d=" + std::to_string(pr.degree) + ":" + std::to_string(got) + "!=" + std::to_string(pr.predicted_rank);
      }
    }
    report("(c) Hilbert ranks", bad.empty(), bad.empty() ? "all degrees match" : "mismatch" + bad);
  }

  const unsigned D = 2 * static_cast<unsigned>(n) - 3;
  F5Config cfg;
  const GroebnerBasis gb = interreduce(field, standard_f5(field, nonzero, D + 1, cfg).basis);
  report("(d) GB max degree", gb.max_degree() == D,
         "max degree " + std::to_string(gb.max_degree()) + ", expected " + std::to_string(D));
  return all ? kExitOk : kExitNonGeneric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of determinantal ideals with syzygy-aware matrix-F5"};
  app.require_subcommand(1);

  InstanceOpts gen_o, gb_o, syz_o, verify_o;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a random instance as JSON");
  add_instance_opts(gen, gen_o, false);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  GbOpts gb_g;
  auto* gb = app.add_subcommand("gb", "compute a Groebner basis");
  add_instance_opts(gb, gb_o);
  gb->add_option("--algo", gb_g.algo, "std, det or det-corank1")->check(CLI::IsMember({"std", "det", "det-corank1"}));
  gb->add_option("--degree-bound,-D", gb_g.D, "degree bound (default r(n-r)+1)");
  gb->add_option("--out", gb_g.out, "output file (default stdout)");
  gb->add_option("--format", gb_g.format, "txt, json or csv (csv = per-matrix stats)")
      ->check(CLI::IsMember({"txt", "json", "csv"}));
  gb->add_option("--trace", gb_g.trace, "write per-matrix stats as JSON lines");
  gb->add_option("--criterion", gb_g.criterion, "divisibility or literal")
      ->check(CLI::IsMember({"divisibility", "literal"}));
  gb->add_flag("--affine", gb_g.affine, "dehomogenize the output at the last variable");
  gb->add_flag("--verify-blocked", gb_g.verify_blocked, "reduce blocked rows too and report nonzero ones");

  std::string syz_out, syz_format = "txt";
  bool syz_second = false;
  auto* syz = app.add_subcommand("syz", "export first (or second) syzygies of the minors");
  add_instance_opts(syz, syz_o);
  syz->add_option("--out", syz_out, "output file (default stdout)");
  syz->add_option("--format", syz_format, "txt or json")->check(CLI::IsMember({"txt", "json"}));
  syz->add_flag("--second", syz_second, "second syzygies (corank one only)");

  std::string bench_rows, bench_out;
  unsigned trials = 1;
  std::uint64_t bench_seed = 1;
  std::uint32_t bench_p = PrimeField::kDefaultPrime;
  std::size_t max_n = 64;
  auto* bench = app.add_subcommand("bench", "count reductions to zero over a grid of (n, r, k)");
  bench->add_option("--rows", bench_rows, "rows as \"n,r,k;n,r,k\" (default: full grid)");
  bench->add_option("--trials", trials, "seeds per row")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "master seed");
  bench->add_option("--p", bench_p, "prime modulus");
  bench->add_option("--max-n", max_n, "skip rows with larger n");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check syzygy and rank predictions on a corank-one instance");
  add_instance_opts(verify, verify_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_o, gen_out);
    if (gb->parsed()) return cmd_gb(gb_o, gb_g);
    if (syz->parsed()) return cmd_syz(syz_o, syz_out, syz_format, syz_second);
    if (bench->parsed()) {
      return cmd_bench(bench_rows.empty() ? default_grid() : parse_rows(bench_rows), trials, bench_seed, bench_p,
                       bench_out, max_n);
    }
    if (verify->parsed()) return cmd_verify(verify_o);
  } catch (const NonGenericInstance& e) {
    std::cerr << "non-generic instance: " << e.what() << '\n';
    return kExitNonGeneric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
