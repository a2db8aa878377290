#include "fpselberg/modp.hpp"

#include "fpselberg/errors.hpp"

#include <string>

namespace fpselberg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FpContext::FpContext(std::uint32_t p) : p_(p) {
  if (p == 2 || !is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime)
    throw RangeError("p = " + std::to_string(p) + " exceeds the supported bound " +
                     std::to_string(kMaxPrime));

  const std::size_t bound = 4 * static_cast<std::size_t>(p);
  fact_.resize(bound + 1);
  fact_[0] = one();
  for (std::size_t n = 1; n <= bound; ++n)
    fact_[n] = mul(fact_[n - 1], from_uint(n));

  inv_fact_.resize(p);
  inv_fact_[p - 1] = inverse(fact_[p - 1]);
  for (std::size_t n = p - 1; n > 0; --n)
    inv_fact_[n - 1] = mul(inv_fact_[n], from_uint(n));
}

Fp FpContext::from_int(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint32_t>(r)};
}

Fp FpContext::add(Fp x, Fp y) const noexcept {
  std::uint32_t s = x.v + y.v;
  return Fp{s >= p_ ? s - p_ : s};
}

Fp FpContext::sub(Fp x, Fp y) const noexcept {
  return Fp{x.v >= y.v ? x.v - y.v : x.v + p_ - y.v};
}

Fp FpContext::neg(Fp x) const noexcept { return Fp{x.v == 0 ? 0 : p_ - x.v}; }

Fp FpContext::mul(Fp x, Fp y) const noexcept {
  return Fp{static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.v) * y.v % p_)};
}

Fp FpContext::pow(Fp x, std::uint64_t e) const noexcept {
  Fp r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp FpContext::inverse(Fp x) const {
  if (x.v == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
  return pow(x, p_ - 2);
}

Fp FpContext::factorial(std::int64_t n) const {
  if (n < 0 || n > factorial_bound())
    throw RangeError("factorial argument " + std::to_string(n) + " outside [0, " +
                     std::to_string(factorial_bound()) + "]");
  return fact_[static_cast<std::size_t>(n)];
}

Fp FpContext::inv_factorial(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(p_))
    throw GuardError("denominator factorial argument " + std::to_string(n) + " outside [0, " +
                     std::to_string(p_ - 1) + "]");
  return inv_fact_[static_cast<std::size_t>(n)];
}

Fp FpContext::binomial_lucas(std::uint64_t n, std::uint64_t m) const {
  Fp r = one();
  while (m > 0) {
    const std::uint64_t nd = n % p_;
    const std::uint64_t md = m % p_;
    if (md > nd) return zero();
    r = mul(r, mul(fact_[nd], mul(inv_fact_[md], inv_fact_[nd - md])));
    n /= p_;
    m /= p_;
  }
  return r;
}

} // namespace fpselberg
