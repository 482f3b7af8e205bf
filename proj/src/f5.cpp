#include "detf5/f5.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "detf5/errors.hpp"
#include "detf5/syzygy.hpp"

namespace detf5 {

std::size_t RunStats::reductions_to_zero() const noexcept {
  std::size_t z = 0;
  for (const StepStats& s : steps) z += s.zeros;
  return z;
}

std::size_t RunStats::zeros_in_degree(unsigned d) const noexcept {
  std::size_t z = 0;
  for (const StepStats& s : steps) {
    if (s.degree == d) z += s.zeros;
  }
  return z;
}

std::size_t RunStats::rows_total() const noexcept {
  std::size_t r = 0;
  for (const StepStats& s : steps) r += s.new_rows;
  return r;
}

std::size_t RunStats::final_rank(unsigned d) const noexcept {
  std::size_t r = 0;
  for (const StepStats& s : steps) {
    if (s.degree == d) r = s.rank;
  }
  return r;
}

std::size_t RunStats::final_rows(unsigned d) const noexcept {
  std::size_t r = 0;
  for (const StepStats& s : steps) {
    if (s.degree == d) r = s.rows;
  }
  return r;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank != 1) throw DimensionError("GroebnerBasis::polynomials: basis of a module of rank > 1");
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const ModuleElement& e : elements) out.push_back(e[0]);
  return out;
}

std::vector<ModuleMonomial> GroebnerBasis::leading_terms() const { return detf5::leading_terms(elements); }

unsigned GroebnerBasis::max_degree() const noexcept {
  unsigned d = 0;
  for (const ModuleElement& e : elements) d = std::max(d, e.degree().value_or(0));
  return d;
}

std::vector<ModuleMonomial> leading_terms(const std::vector<ModuleElement>& elems) {
  std::vector<ModuleMonomial> out;
  out.reserve(elems.size());
  for (const ModuleElement& e : elems) out.push_back(leading_term_pot(e).first);
  return out;
}

namespace {

bool divided_by_any(const std::vector<Monomial>& leads, const Monomial& m) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& t) { return t.divides(m); });
}

using MonoSet = std::unordered_set<Monomial, MonomialHash>;

struct Candidate {
  Signature sig;
  std::uint32_t tau_idx;
  SparseRow row;
  bool blocked;
};

}  // namespace

F5Result matrix_f5(const PrimeField& field, const std::vector<ModuleElement>& F, unsigned D,
                   const std::vector<ModuleMonomial>& syz_leads, const F5Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  F5Result res;
  res.basis.degree_bound = D;
  if (F.empty()) return res;
  const std::size_t t = F.front().rank();
  const std::size_t k = F.front().nvars();
  const std::size_t ell = F.size();
  res.basis.rank = t;
  res.basis.nvars = k;
  std::vector<unsigned> degs(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    if (F[i].rank() != t || F[i].nvars() != k) throw DimensionError("matrix_f5: generators live in different modules");
    auto d = F[i].degree();
    if (!d) throw HomogeneityError("matrix_f5: generator " + std::to_string(i + 1) + " is zero or inhomogeneous");
    degs[i] = *d;
    if (i > 0 && degs[i] < degs[i - 1]) throw std::invalid_argument("matrix_f5: generators must be sorted by degree");
  }
  const bool f5_crit = cfg.use_f5_criterion && t == 1;

  MonomialTable table(k);
  std::vector<std::vector<Monomial>> known(ell);  // Divisibility: persistent leads per index
  std::vector<MonoSet> exact(ell);                // Literal: leads of S
  std::vector<MonoSet> zero_children(ell);        // Literal: children of last degree's zero rows
  for (const ModuleMonomial& m : syz_leads) {
    if (m.position >= ell) throw DimensionError("matrix_f5: syzygy lead outside the generator range");
    known[m.position].push_back(m.mono);
    exact[m.position].insert(m.mono);
  }
  // f5_lead[e][mono] = index of the pivot row of degree e with that leader.
  std::vector<std::vector<std::uint32_t>> f5_lead;
  std::vector<std::vector<SignedRow>> prev_rows(ell);
  std::optional<ColumnLayout> prev_layout;
  std::vector<std::vector<Monomial>> g_leads(t);

  for (unsigned d = degs.front(); d <= D; ++d) {
    ColumnLayout layout(table, t, d);
    SignatureEchelon ech(field, layout.size());
    if (cfg.collect_trace) ech.set_trace(&res.stats.trace);
    std::span<const std::uint32_t> tv;
    if (prev_layout) tv = table.times_var(d - 1);
    std::vector<std::vector<Monomial>> zero_now(ell);

    for (std::uint32_t i = 0; i < ell; ++i) {
      if (d < degs[i]) continue;
      StepStats st;
      st.degree = d;
      st.index = i;
      st.rows = ech.rank();
      const unsigned e = d - degs[i];
      const DegreeBasis& tau_basis = table.basis(e);
      std::vector<Candidate> cands;
      if (e == 0) {
        cands.push_back({{i, Monomial(k)}, 0, layout.to_row(F[i]), false});
      } else {
        const std::vector<std::uint32_t>* lead_e = (f5_crit && e < f5_lead.size()) ? &f5_lead[e] : nullptr;
        for (const SignedRow& row : prev_rows[i]) {
          const Monomial& tau = row.sig.tau;
          for (std::size_t j = tau.max_variable(); j < k; ++j) {
            Monomial sigma = tau * Monomial::variable(k, j);
            const std::uint32_t idx = tau_basis.index_of(sigma);
            bool blocked = false;
            if (cfg.criterion == CriterionMode::Divisibility ? divided_by_any(known[i], sigma)
                                                              : (exact[i].count(sigma) || zero_children[i].count(sigma))) {
              ++st.blocked_syz;
              blocked = true;
            } else if (lead_e && !lead_e->empty() && (*lead_e)[idx] < i) {
              ++st.blocked_f5;
              blocked = true;
            }
            if (blocked && !cfg.verify_blocked) continue;
            SparseRow r = blocked ? layout.to_row(mono_mul(F[i], sigma)) : shift_row(row.row, *prev_layout, layout, tv, k, j);
            cands.push_back({{i, std::move(sigma)}, idx, std::move(r), blocked});
          }
        }
        // Ascending signature = descending position in the grevlex-decreasing basis.
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.tau_idx > b.tau_idx; });
      }
      for (Candidate& c : cands) {
        if (c.blocked) {
          ++res.stats.blocked_checked;
          if (!ech.reduces_to_zero(c.row)) ++res.stats.blocked_nonzero;
          continue;
        }
        ++st.new_rows;
        Signature sig = c.sig;
        if (!ech.insert({std::move(c.sig), std::move(c.row)})) {
          ++st.zeros;
          if (cfg.abort_on_zero) {
            throw NonGenericInstance("reduction to zero in degree " + std::to_string(d), to_string(sig));
          }
          zero_now[i].push_back(sig.tau);
          res.stats.zero_sigs.push_back(std::move(sig));
        }
      }
      st.rows += st.new_rows;
      st.rank = ech.rank();
      res.stats.steps.push_back(st);
    }

    res.stats.field_ops += ech.field_ops();
    std::vector<SignedRow> pivots = ech.take_pivots();
    if (f5_crit) {
      if (f5_lead.size() <= d) f5_lead.resize(d + 1);
      f5_lead[d].assign(layout.size(), std::numeric_limits<std::uint32_t>::max());
      for (const SignedRow& r : pivots) f5_lead[d][r.row.cols.front()] = r.sig.index;
    }
    if (cfg.build_basis) {
      for (const SignedRow& r : pivots) {
        ModuleMonomial lead = layout.monomial(r.row.cols.front());
        if (divided_by_any(g_leads[lead.position], lead.mono)) continue;
        res.basis.elements.push_back(layout.to_element(r.row));
        g_leads[lead.position].push_back(std::move(lead.mono));
      }
    }
    for (std::size_t i = 0; i < ell; ++i) {
      if (cfg.criterion == CriterionMode::Divisibility) {
        known[i].insert(known[i].end(), zero_now[i].begin(), zero_now[i].end());
      } else {
        zero_children[i].clear();
        for (const Monomial& tau : zero_now[i]) {
          for (std::size_t j = 0; j < k; ++j) zero_children[i].insert(tau * Monomial::variable(k, j));
        }
      }
      prev_rows[i].clear();
    }
    for (SignedRow& r : pivots) prev_rows[r.sig.index].push_back(std::move(r));
    prev_layout.emplace(layout);
  }
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

F5Result matrix_f5(const PrimeField& field, const std::vector<Polynomial>& F, unsigned D,
                   const std::vector<ModuleMonomial>& syz_leads, const F5Config& cfg) {
  std::vector<ModuleElement> gens;
  gens.reserve(F.size());
  for (const Polynomial& f : F) gens.emplace_back(std::vector<Polynomial>{f}, f.nvars());
  return matrix_f5(field, gens, D, syz_leads, cfg);
}

F5Result standard_f5(const PrimeField& field, const std::vector<Polynomial>& F, unsigned D, const F5Config& cfg) {
  return matrix_f5(field, F, D, {}, cfg);
}

std::uint64_t DetF5Result::total_field_ops() const noexcept {
  std::uint64_t ops = stats.field_ops;
  for (const PhaseStats& p : phases) ops += p.stats.field_ops;
  return ops;
}

DetF5Result det_f5(const PrimeField& field, const DetSystem& ds, unsigned D, const F5Config& cfg) {
  if (ds.r < 1 || ds.r + 2 > ds.n()) throw WrongCorank("det_f5: requires 1 <= r <= n-2");
  DetF5Result out;
  const SyzygyBasis S = syz_gen(field, ds);
  F5Config phase = cfg;
  phase.build_basis = true;  // the leads feed the next phase
  F5Result s1 = matrix_f5(field, S.elements(), 1, {}, phase);
  out.phases.push_back({"syzygies", s1.stats, s1.basis.elements.size()});
  F5Result g = matrix_f5(field, ds.gens, D, leading_terms(s1.basis.elements), cfg);
  out.basis = std::move(g.basis);
  out.stats = std::move(g.stats);
  return out;
}

DetF5Result det_f5_corank_one(const PrimeField& field, const DetSystem& ds, unsigned D, const F5Config& cfg) {
  const std::size_t n = ds.n();
  if (n < 3 || ds.r + 2 != n) throw WrongCorank("det_f5_corank_one: requires n >= 3 and r = n-2");
  F5Config strict = cfg;
  strict.abort_on_zero = true;
  F5Config phase = strict;
  phase.build_basis = true;
  DetF5Result out;
  const long d2 = static_cast<long>(D) - static_cast<long>(n);
  std::vector<ModuleMonomial> leads2, leads1;
  if (d2 >= 1) {
    const SyzygyBasis S2 = syz2_corank_one(field, ds);
    F5Result r2 = matrix_f5(field, S2.elements(), static_cast<unsigned>(d2), {}, phase);
    out.phases.push_back({"second syzygies", r2.stats, r2.basis.elements.size()});
    leads2 = leading_terms(r2.basis.elements);
  }
  if (d2 + 1 >= 1) {
    const SyzygyBasis S1 = syz_corank_one(field, ds);
    F5Result r1 = matrix_f5(field, S1.elements(), static_cast<unsigned>(d2 + 1), leads2, phase);
    out.phases.push_back({"first syzygies", r1.stats, r1.basis.elements.size()});
    leads1 = leading_terms(r1.basis.elements);
  }
  F5Result g = matrix_f5(field, ds.gens, D, leads1, strict);
  out.basis = std::move(g.basis);
  out.stats = std::move(g.stats);
  return out;
}

Polynomial normal_form(const PrimeField& field, Polynomial f, const std::vector<Polynomial>& G) {
  std::vector<Term> done;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    const Polynomial* red = nullptr;
    for (const Polynomial& g : G) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red) {
      const Fp c = field.neg(field.mul(lt.coeff, field.inv(red->leading_term().coeff)));
      f = add_scaled(field, f, c, red->leading_monomial().quotient_of(lt.mono), *red);
    } else {
      done.push_back(lt);
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      f = Polynomial::from_sorted(f.nvars(), std::move(rest));
    }
  }
  return Polynomial::from_sorted(f.nvars(), std::move(done));
}

GroebnerBasis interreduce(const PrimeField& field, const GroebnerBasis& G) {
  std::vector<Polynomial> polys;
  for (const Polynomial& p : G.polynomials()) {
    if (!p.is_zero()) polys.push_back(make_monic(field, p));
  }
  // One pass settles a Groebner basis. A leader that drops means the input
  // was not one, and the pass is repeated on its own output.
  for (bool stable = false; !stable;) {
    stable = true;
    std::stable_sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
      return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> reduced;
    reduced.reserve(polys.size());
    for (Polynomial& p : polys) {
      Polynomial nf = normal_form(field, p, reduced);
      if (nf.is_zero()) continue;
      if (!(nf.leading_monomial() == p.leading_monomial())) stable = false;
      reduced.push_back(make_monic(field, nf));
    }
    polys = std::move(reduced);
  }
  GroebnerBasis out;
  out.rank = 1;
  out.nvars = G.nvars;
  out.degree_bound = G.degree_bound;
  out.reduced = true;
  for (Polynomial& p : polys) out.elements.emplace_back(std::vector<Polynomial>{std::move(p)}, out.nvars);
  return out;
}

}  // namespace detf5
