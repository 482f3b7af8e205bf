#include "detf5/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "detf5/errors.hpp"

namespace detf5 {

Polynomial Polynomial::from_terms(const PrimeField& field, std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.nvars() != nvars) throw DimensionError("Polynomial::from_terms: variable count mismatch");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  Polynomial out(nvars);
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff);
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.v == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.v == 0) out.terms_.pop_back();
  return out;
}

Polynomial Polynomial::from_sorted(std::size_t nvars, std::vector<Term> terms) {
  Polynomial out(nvars);
  out.terms_ = std::move(terms);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, Fp c) {
  Polynomial out(nvars);
  if (c.v != 0) out.terms_.push_back({Monomial(nvars), c});
  return out;
}

Polynomial Polynomial::monomial(const Monomial& m, Fp c) {
  Polynomial out(m.nvars());
  if (c.v != 0) out.terms_.push_back({m, c});
  return out;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw EmptySupport("Polynomial::leading_term: zero polynomial");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const Term& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::optional<unsigned> Polynomial::degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

unsigned Polynomial::max_degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Fp Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_cmp(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Fp{0};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff.v);
    } else if (t.coeff.v == 1) {
      out += t.mono.to_string();
    } else {
      out += std::to_string(t.coeff.v) + '*' + t.mono.to_string();
    }
  }
  return out;
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b, Homogeneity h) {
  if (a.nvars() != b.nvars()) throw DimensionError("polynomial arithmetic: variable count mismatch");
  if (h == Homogeneity::Enforce && !a.is_zero() && !b.is_zero() && a.degree() != b.degree()) {
    throw HomogeneityError("polynomial add: operands are not homogeneous of one degree");
  }
}

// Merge a + c*b where b's terms are already sorted; `shift` multiplies b's monomials.
Polynomial merge(const PrimeField& field, const Polynomial& a, Fp c, const Monomial* shift, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  auto shifted = [&](const Term& t) { return shift ? t.mono * *shift : t.mono; };
  while (ia != ea || ib != eb) {
    if (ib == eb) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = shifted(*ib);
    if (ia == ea) {
      out.push_back({std::move(mb), field.mul(c, ib->coeff)});
      ++ib;
      continue;
    }
    auto cmp = grevlex_cmp(ia->mono, mb);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), field.mul(c, ib->coeff)});
      ++ib;
    } else {
      Fp s = field.add(ia->coeff, field.mul(c, ib->coeff));
      if (s.v != 0) out.push_back({std::move(mb), s});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_sorted(a.nvars(), std::move(out));
}

}  // namespace

Polynomial add(const PrimeField& field, const Polynomial& a, const Polynomial& b, Homogeneity h) {
  check_compatible(a, b, h);
  return merge(field, a, Fp{1}, nullptr, b);
}

Polynomial sub(const PrimeField& field, const Polynomial& a, const Polynomial& b, Homogeneity h) {
  check_compatible(a, b, h);
  return merge(field, a, field.neg(Fp{1}), nullptr, b);
}

Polynomial scale(const PrimeField& field, const Polynomial& a, Fp c) {
  if (c.v == 0) return Polynomial(a.nvars());
  std::vector<Term> out = a.terms();
  for (Term& t : out) t.coeff = field.mul(t.coeff, c);
  return Polynomial::from_sorted(a.nvars(), std::move(out));
}

Polynomial negate(const PrimeField& field, const Polynomial& a) {
  std::vector<Term> out = a.terms();
  for (Term& t : out) t.coeff = field.neg(t.coeff);
  return Polynomial::from_sorted(a.nvars(), std::move(out));
}

Polynomial mono_mul(const Polynomial& a, const Monomial& m) {
  std::vector<Term> out = a.terms();
  for (Term& t : out) t.mono *= m;  // grevlex is multiplicative, order is kept
  return Polynomial::from_sorted(a.nvars(), std::move(out));
}

Polynomial mul(const PrimeField& field, const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("mul: variable count mismatch");
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  const std::uint64_t p = field.modulus();
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      auto& slot = acc[ta.mono * tb.mono];
      slot = (slot + static_cast<std::uint64_t>(ta.coeff.v) * tb.coeff.v) % p;
    }
  }
  field_op_counter().arith += 2 * a.size() * b.size();
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, Fp{static_cast<std::uint32_t>(c)}});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grevlex_cmp(x.mono, y.mono) > 0; });
  return Polynomial::from_sorted(a.nvars(), std::move(terms));
}

Polynomial add_scaled(const PrimeField& field, const Polynomial& a, Fp c, const Monomial& m, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("add_scaled: variable count mismatch");
  return merge(field, a, c, &m, b);
}

Fp evaluate(const PrimeField& field, const Polynomial& a, std::span<const Fp> point) {
  if (point.size() != a.nvars()) throw DimensionError("evaluate: point has wrong dimension");
  Fp acc{0};
  for (const Term& t : a.terms()) {
    Fp v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

Polynomial dehomogenize(const PrimeField& field, const Polynomial& a, std::size_t var) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) {
    std::vector<std::uint16_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    e.at(var) = 0;
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(field, a.nvars(), std::move(out));
}

Polynomial make_monic(const PrimeField& field, const Polynomial& a) {
  if (a.is_zero() || a.leading_term().coeff.v == 1) return a;
  return scale(field, a, field.inv(a.leading_term().coeff));
}

std::strong_ordering pot_cmp(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.position != b.position) return a.position <=> b.position;
  return grevlex_cmp(a.mono, b.mono);
}

bool module_divides(const ModuleMonomial& a, const ModuleMonomial& b) noexcept {
  return a.position == b.position && a.mono.divides(b.mono);
}

ModuleElement::ModuleElement(std::vector<Polynomial> coords, std::size_t nvars)
    : coords_(std::move(coords)), nvars_(nvars) {
  std::optional<unsigned> deg;
  for (const Polynomial& p : coords_) {
    if (p.nvars() != nvars_) throw DimensionError("ModuleElement: coordinate has wrong variable count");
    if (p.is_zero()) continue;
    auto d = p.degree();
    if (!d || (deg && *deg != *d)) throw HomogeneityError("ModuleElement: coordinates must be homogeneous of one degree");
    deg = d;
  }
}

bool ModuleElement::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<unsigned> ModuleElement::degree() const noexcept {
  for (const Polynomial& p : coords_) {
    if (!p.is_zero()) return p.degree();
  }
  return std::nullopt;
}

std::size_t ModuleElement::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

void ModuleElement::set(std::size_t i, Polynomial p) {
  if (p.nvars() != nvars_) throw DimensionError("ModuleElement::set: wrong variable count");
  if (!p.is_zero()) {
    auto d = degree();
    if (!p.degree() || (d && *d != *p.degree())) throw HomogeneityError("ModuleElement::set: degree mismatch");
  }
  coords_.at(i) = std::move(p);
}

std::string ModuleElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::pair<ModuleMonomial, Fp> leading_term_pot(const ModuleElement& f) {
  for (std::size_t i = f.rank(); i-- > 0;) {
    if (!f[i].is_zero()) return {ModuleMonomial{i, f[i].leading_monomial()}, f[i].leading_term().coeff};
  }
  throw EmptySupport("leading_term_pot: zero module element");
}

ModuleElement scale(const PrimeField& field, const ModuleElement& f, Fp c) {
  std::vector<Polynomial> coords;
  coords.reserve(f.rank());
  for (const Polynomial& p : f.coords()) coords.push_back(scale(field, p, c));
  return ModuleElement(std::move(coords), f.nvars());
}

ModuleElement mono_mul(const ModuleElement& f, const Monomial& m) {
  std::vector<Polynomial> coords;
  coords.reserve(f.rank());
  for (const Polynomial& p : f.coords()) coords.push_back(mono_mul(p, m));
  return ModuleElement(std::move(coords), f.nvars());
}

Polynomial contract(const PrimeField& field, const ModuleElement& s, const std::vector<Polynomial>& gens) {
  if (s.rank() != gens.size()) throw DimensionError("contract: rank does not match generator count");
  Polynomial acc(s.nvars());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (s[j].is_zero()) continue;
    acc = add(field, acc, mul(field, s[j], gens[j]), Homogeneity::Ignore);
  }
  return acc;
}

ModuleElement contract(const PrimeField& field, const ModuleElement& s, const std::vector<ModuleElement>& gens) {
  if (s.rank() != gens.size()) throw DimensionError("contract: rank does not match generator count");
  if (gens.empty()) return ModuleElement(0, s.nvars());
  const std::size_t t = gens.front().rank();
  std::vector<Polynomial> acc(t, Polynomial(s.nvars()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (s[j].is_zero()) continue;
    for (std::size_t c = 0; c < t; ++c) {
      if (gens[j][c].is_zero()) continue;
      acc[c] = add(field, acc[c], mul(field, s[j], gens[j][c]), Homogeneity::Ignore);
    }
  }
  return ModuleElement(std::move(acc), s.nvars());
}

}  // namespace detf5
