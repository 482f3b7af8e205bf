#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "detf5/errors.hpp"

namespace detf5 {

/// Element of GF(p), always kept in canonical form [0, p).
struct Fp {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

/// Per-thread tally of scalar field operations issued through PrimeField.
/// Sign flips are counted apart from arithmetic: they never combine two
/// field values and are the only thing symbolic syzygy code is allowed to do.
struct FieldOpCounter {
  std::uint64_t arith = 0;  // add, sub, mul, inv
  std::uint64_t neg = 0;
};

FieldOpCounter& field_op_counter();

/// Prime field GF(p) with p < 2^31, so a product of two reduced values fits
/// comfortably in 64 bits and many of them can be accumulated before reducing.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 65521;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const noexcept { return p_; }

  Fp zero() const noexcept { return Fp{0}; }
  Fp one() const noexcept { return Fp{1}; }
  Fp from_int(std::int64_t x) const noexcept;
  Fp from_uint(std::uint64_t x) const noexcept { return Fp{static_cast<std::uint32_t>(x % p_)}; }

  Fp add(Fp a, Fp b) const noexcept {
    ++field_op_counter().arith;
    std::uint32_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const noexcept {
    ++field_op_counter().arith;
    return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
  }
  Fp mul(Fp a, Fp b) const noexcept {
    ++field_op_counter().arith;
    return Fp{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  Fp neg(Fp a) const noexcept {
    ++field_op_counter().neg;
    return Fp{a.v == 0 ? 0 : p_ - a.v};
  }
  /// Throws DivisionByZero for a = 0.
  Fp inv(Fp a) const;
  Fp pow(Fp a, std::uint64_t e) const noexcept;

  // Raw helpers for inner kernels that do their own op accounting.
  std::uint32_t reduce(std::uint64_t x) const noexcept { return static_cast<std::uint32_t>(x % p_); }
  std::uint32_t inv_raw(std::uint32_t a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// SplitMix64: a counter-based 64-bit generator. The whole stream is a
/// function of the seed, so instance files only need to carry the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; portable across standard libraries.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// Uniform field element; advances the generator.
Fp rand_elem(const PrimeField& field, Rng& rng) noexcept;

}  // namespace detf5
