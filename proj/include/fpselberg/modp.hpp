#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace fpselberg {

// Element of F_p. The value is always the canonical residue in [0, p-1];
// the modulus lives in the FpContext that produced it.
struct Fp {
  std::uint32_t v = 0;

  friend bool operator==(Fp, Fp) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v; }

// Deterministic trial division.
bool is_prime(std::uint64_t n);

// The ambient field F_p for an odd prime p, with factorials tabulated up to
// 4p (values at arguments >= p are zero) and inverse factorials for 0..p-1.
// Immutable after construction.
class FpContext {
public:
  static constexpr std::uint32_t kMaxPrime = 1u << 20;

  explicit FpContext(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Fp zero() const noexcept { return Fp{0}; }
  Fp one() const noexcept { return Fp{1}; }
  Fp from_int(std::int64_t x) const noexcept;
  Fp from_uint(std::uint64_t x) const noexcept { return Fp{static_cast<std::uint32_t>(x % p_)}; }

  Fp add(Fp x, Fp y) const noexcept;
  Fp sub(Fp x, Fp y) const noexcept;
  Fp neg(Fp x) const noexcept;
  Fp mul(Fp x, Fp y) const noexcept;
  Fp pow(Fp x, std::uint64_t e) const noexcept;
  // Throws DomainError for x = 0.
  Fp inverse(Fp x) const;
  Fp div(Fp x, Fp y) const { return mul(x, inverse(y)); }
  // (-1)^k
  Fp sign(std::int64_t k) const noexcept { return (k % 2 == 0) ? one() : neg(one()); }

  // n! mod p for 0 <= n <= 4p; zero exactly when n >= p. RangeError otherwise.
  Fp factorial(std::int64_t n) const;
  // 1/n! for 0 <= n <= p-1. Any other argument means a formula is about to
  // divide by zero (or by a negative factorial): GuardError.
  Fp inv_factorial(std::int64_t n) const;
  std::int64_t factorial_bound() const noexcept { return 4 * static_cast<std::int64_t>(p_); }

  // C(n, m) mod p via the base-p digit product; C(n, m) = 0 for m > n.
  Fp binomial_lucas(std::uint64_t n, std::uint64_t m) const;

private:
  std::uint32_t p_;
  std::vector<Fp> fact_;
  std::vector<Fp> inv_fact_;
};

} // namespace fpselberg
