#include "detf5/gf.hpp"

#include <limits>
#include <string>

namespace detf5 {

FieldOpCounter& field_op_counter() {
  thread_local FieldOpCounter counter;
  return counter;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) {
    throw std::invalid_argument("PrimeField: modulus must be below 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
  }
}

Fp PrimeField::from_int(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint32_t>(r)};
}

std::uint32_t PrimeField::inv_raw(std::uint32_t a) const {
  if (a % p_ == 0) throw DivisionByZero("PrimeField: inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

Fp PrimeField::inv(Fp a) const {
  ++field_op_counter().arith;
  return Fp{inv_raw(a.v)};
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const noexcept {
  std::uint64_t base = a.v, acc = 1;
  while (e != 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  field_op_counter().arith += 1;
  return Fp{static_cast<std::uint32_t>(acc)};
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Fp rand_elem(const PrimeField& field, Rng& rng) noexcept {
  return Fp{static_cast<std::uint32_t>(rng.below(field.modulus()))};
}

}  // namespace detf5
