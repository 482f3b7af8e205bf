#include "detf5/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "detf5/errors.hpp"
#include "detf5/linalg.hpp"

namespace detf5 {

std::vector<ModuleElement> SyzygyBasis::elements() const {
  std::vector<ModuleElement> out;
  out.reserve(syzygies.size());
  for (const Syzygy& s : syzygies) out.push_back(s.elem);
  return out;
}

namespace {

// Collects signed entries per position. Two entries landing on one position
// must be the same entry with opposite signs; they cancel.
class SymbolicBuilder {
 public:
  void add(std::size_t position, bool negative, std::size_t row, std::size_t col) {
    SymbolicTerm t{static_cast<std::uint32_t>(position), negative, static_cast<std::uint8_t>(row),
                   static_cast<std::uint8_t>(col)};
    auto it = terms_.find(t.position);
    if (it == terms_.end()) {
      terms_.emplace(t.position, t);
      return;
    }
    if (it->second.row != t.row || it->second.col != t.col || it->second.negative == t.negative) {
      throw std::logic_error("symbolic syzygy: colliding coordinates do not cancel");
    }
    terms_.erase(it);
  }

  std::vector<SymbolicTerm> take() {
    std::vector<SymbolicTerm> out;
    out.reserve(terms_.size());
    for (auto& [pos, t] : terms_) out.push_back(t);
    terms_.clear();
    return out;
  }

 private:
  std::map<std::uint32_t, SymbolicTerm> terms_;
};

ModuleElement materialize(const PrimeField& field, const LinearMatrix& m, const std::vector<SymbolicTerm>& terms,
                          std::size_t rank) {
  std::vector<Polynomial> coords(rank, Polynomial(m.k()));
  for (const SymbolicTerm& t : terms) {
    const Polynomial& e = m.entry(t.row, t.col);
    coords.at(t.position) = t.negative ? negate(field, e) : e;
  }
  return ModuleElement(std::move(coords), m.k());
}

bool odd(std::size_t a) { return a % 2 == 1; }

// Families (i)-(iv) for an s x s matrix. pos(k, j) is the generator index of
// the minor deleting row k and column j; entry(a, b) maps local entries to
// ambient ones.
using PosFn = std::function<std::size_t(std::size_t, std::size_t)>;
using EntryFn = std::function<std::pair<std::size_t, std::size_t>(std::size_t, std::size_t)>;

struct RawSyzygy {
  std::vector<SymbolicTerm> terms;
  std::string tag;
};

std::string idx_tag(const char* fam, std::size_t a) { return std::string(fam) + "(" + std::to_string(a + 1) + ")"; }
std::string idx_tag(const char* fam, std::size_t a, std::size_t b) {
  return std::string(fam) + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

std::vector<RawSyzygy> corank_one_symbolic(std::size_t s, const PosFn& pos, const EntryFn& entry) {
  std::vector<RawSyzygy> out;
  out.reserve(2 * s * s - 2);
  SymbolicBuilder b;
  auto add = [&](std::size_t k, std::size_t j, bool negative, std::size_t ea, std::size_t eb) {
    auto [ga, gb] = entry(ea, eb);
    b.add(pos(k, j), negative, ga, gb);
  };
  // (i): coefficient (-1)^(k+j) m_{k,i} on minor(k, j).
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < s; ++k) add(k, j, odd(k + j), k, i);
      out.push_back({b.take(), idx_tag("I", i, j)});
    }
  }
  // (ii): coefficient (-1)^(i+k) m_{j,k} on minor(i, k).
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < s; ++k) add(i, k, odd(i + k), j, k);
      out.push_back({b.take(), idx_tag("II", i, j)});
    }
  }
  // (iii): column i of M against row 1; the shared coordinate cancels.
  for (std::size_t i = 0; i + 1 < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) add(k, i, odd(k + i), k, i);
    for (std::size_t k = 0; k < s; ++k) add(0, k, !odd(k), 0, k);
    out.push_back({b.take(), idx_tag("III", i)});
  }
  // (iv): row j of M against row 1.
  for (std::size_t j = 1; j < s; ++j) {
    for (std::size_t k = 0; k < s; ++k) add(j, k, odd(j + k), j, k);
    for (std::size_t k = 0; k < s; ++k) add(0, k, !odd(k), 0, k);
    out.push_back({b.take(), idx_tag("IV", j)});
  }
  return out;
}

Subset without(std::size_t s, std::size_t skip) {
  Subset out;
  for (std::size_t a = 0; a < s; ++a) {
    if (a != skip) out.push_back(static_cast<std::uint8_t>(a));
  }
  return out;
}

}  // namespace

SyzygyBasis syz_corank_one(const PrimeField& field, const DetSystem& ds) {
  const std::size_t n = ds.n();
  if (n < 2 || ds.r + 2 != n) throw WrongCorank("syz_corank_one: requires r = n-2");
  auto pos = [&](std::size_t k, std::size_t j) { return ds.flat(without(n, k), without(n, j)); };
  auto entry = [](std::size_t a, std::size_t b) { return std::pair{a, b}; };
  SyzygyBasis out{ds.size(), ds.k(), {}};
  for (RawSyzygy& raw : corank_one_symbolic(n, pos, entry)) {
    ModuleElement e = materialize(field, ds.matrix, raw.terms, ds.size());
    out.syzygies.push_back({std::move(raw.terms), std::move(raw.tag), std::move(e)});
  }
  return out;
}

SyzygyBasis syz_gen(const PrimeField& field, const DetSystem& ds) {
  const std::size_t n = ds.n();
  const std::size_t r = ds.r;
  if (r < 1 || r + 2 > n) throw WrongCorank("syz_gen: requires 1 <= r <= n-2");
  const std::size_t s = r + 2;
  SyzygyBasis out{ds.size(), ds.k(), {}};
  // Keys are the term lists with the first sign normalized to +.
  std::set<std::vector<SymbolicTerm>> seen;
  const auto subsets = all_subsets(n, s);
  std::size_t sub_id = 0;
  for (const Subset& rows : subsets) {
    for (const Subset& cols : subsets) {
      auto pos = [&](std::size_t k, std::size_t j) {
        MinorIndex local{without(s, k), without(s, j), 0};
        return minor_index_map(rows, cols, local, ds);
      };
      auto entry = [&](std::size_t a, std::size_t b) { return std::pair<std::size_t, std::size_t>{rows[a], cols[b]}; };
      for (RawSyzygy& raw : corank_one_symbolic(s, pos, entry)) {
        std::sort(raw.terms.begin(), raw.terms.end(),
                  [](const SymbolicTerm& x, const SymbolicTerm& y) { return x.position < y.position; });
        std::vector<SymbolicTerm> key = raw.terms;
        if (!key.empty() && key.front().negative) {
          for (SymbolicTerm& t : key) t.negative = !t.negative;
        }
        if (!seen.insert(std::move(key)).second) continue;
        ModuleElement e = materialize(field, ds.matrix, raw.terms, ds.size());
        out.syzygies.push_back({std::move(raw.terms), "N" + std::to_string(sub_id) + ":" + raw.tag, std::move(e)});
      }
      ++sub_id;
    }
  }
  return out;
}

SyzygyBasis syz2_corank_one(const PrimeField& field, const DetSystem& ds) {
  const std::size_t n = ds.n();
  if (n < 2 || ds.r + 2 != n) throw WrongCorank("syz2_corank_one: requires r = n-2");
  const CorankOneLayout L{n};
  SyzygyBasis out{L.count(), ds.k(), {}};
  // The image of E_ab is (E_ab M, M E_ab) in the basis B1(i,j) = (E_ij, 0),
  // B2(i,j) = (0, E_ij), B3(i) = (E_ii, E_11), B4(j) = (0, E_jj - E_11).
  // The first syzygy of family (ii) and (iv) is minus the image of B2 and
  // B4, which flips those coordinates.
  auto emit = [&](std::size_t a, std::size_t b, const char* fam, std::size_t ta, std::size_t tb) {
    SymbolicBuilder sb;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != a) sb.add(L.type1(a, k), false, b, k);
      if (k != b) sb.add(L.type2(k, b), true, k, a);
    }
    if (a + 1 < n) {
      sb.add(L.type3(a), false, b, a);
      if (b >= 1) sb.add(L.type4(b), true, b, a);
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) sb.add(L.type3(i), true, b, n - 1);
      for (std::size_t j = 1; j < n; ++j) {
        if (j != b) sb.add(L.type4(j), false, b, n - 1);
      }
    }
    std::vector<SymbolicTerm> terms = sb.take();
    ModuleElement e = materialize(field, ds.matrix, terms, L.count());
    std::string tag = std::string(fam);
    tag += tb == SIZE_MAX ? (ta == SIZE_MAX ? "" : "(" + std::to_string(ta + 1) + ")")
                          : "(" + std::to_string(ta + 1) + "," + std::to_string(tb + 1) + ")";
    out.syzygies.push_back({std::move(terms), std::move(tag), std::move(e)});
  };
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a + 1 < n; ++a) emit(a, b, "I", b, a);
  }
  for (std::size_t b = 1; b < n; ++b) emit(n - 1, b, "II", b, SIZE_MAX);
  for (std::size_t a = 0; a + 1 < n; ++a) emit(a, 0, "III", a, SIZE_MAX);
  emit(n - 1, 0, "IV", SIZE_MAX, SIZE_MAX);
  return out;
}

ConjecturedCount conjectured_syz_count(std::size_t n, std::size_t r) {
  if (r < 1 || r + 2 > n) throw std::invalid_argument("conjectured_syz_count: requires 1 <= r <= n-2");
  const std::uint64_t c = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r + 2));
  const std::uint64_t den = n - r - 1;
  const std::uint64_t num = c * c * (2 * (r + 2) * (r + 1) + (2 * r + 2) * den);
  return {num / den, num % den == 0};
}

std::size_t degree_one_rank(const PrimeField& field, const std::vector<ModuleElement>& elems) {
  if (elems.empty()) return 0;
  const std::size_t rank_t = elems.front().rank();
  const std::size_t k = elems.front().nvars();
  DenseMatrix m(0, rank_t * k);
  for (const ModuleElement& e : elems) {
    auto row = m.add_row();
    for (std::size_t pos = 0; pos < rank_t; ++pos) {
      for (const Term& t : e[pos].terms()) {
        if (t.mono.degree() != 1) throw std::invalid_argument("degree_one_rank: coordinates must be linear");
        row[pos * k + t.mono.max_variable()] = t.coeff.v;
      }
    }
  }
  return rank(field, std::move(m));
}

}  // namespace detf5
