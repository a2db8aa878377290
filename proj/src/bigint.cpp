#include "fpselberg/bigint.hpp"

namespace fpselberg {

BigInt big_factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt big_binomial(std::uint64_t n, std::uint64_t m) {
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  BigInt r = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    r *= n - m + k;
    r /= k;
  }
  return r;
}

std::uint32_t reduce_mod(const BigInt& x, std::uint32_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

} // namespace fpselberg
