#pragma once

#include "fpselberg/bigint.hpp"
#include "fpselberg/factorial_ratio.hpp"
#include "fpselberg/modp.hpp"
#include "fpselberg/multipoly.hpp"

#include <cstdint>

namespace fpselberg {

// (a, b, c) with 0 < a, b, c < p.
class SelbergParams {
public:
  SelbergParams(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }
  // a + b + 2c + 1 - 2p, governs the [1,2] case analysis.
  std::int64_t delta() const noexcept {
    return std::int64_t{a_} + b_ + 2 * std::int64_t{c_} + 1 - 2 * std::int64_t{p_};
  }

  friend bool operator==(const SelbergParams&, const SelbergParams&) = default;

private:
  std::uint32_t p_, a_, b_, c_;
};

// Phi_n = prod_{i<j} (x_i - x_j)^{2c} prod_i x_i^a (1 - x_i)^b.
// The exponents are only required to be non-negative here so that the
// n-dimensional oracle can cover the boundary a, b, c = 0.
struct MasterPolySpec {
  std::size_t n;
  std::uint32_t a, b, c;

  MasterPolySpec(std::size_t n, std::uint32_t a, std::uint32_t b, std::uint32_t c);
  MasterPolySpec(std::size_t n, const SelbergParams& params)
      : MasterPolySpec(n, params.a(), params.b(), params.c()) {}
};

FpPoly master_polynomial(const MasterPolySpec& spec, std::uint32_t p);
IntPoly master_polynomial_exact(const MasterPolySpec& spec);

// Dimension cap for brute-force evaluation: n <= 3, and p <= 11 when n = 3.
void check_bruteforce_budget(std::size_t n, std::uint32_t p);

// Coefficient of the cycle monomial in Phi_n, over F_p.
Fp selberg_bruteforce(const FpContext& ctx, const MasterPolySpec& spec, const Cycle& cycle);
// Same coefficient over Z (S rather than its projection).
BigInt selberg_bruteforce_exact(const MasterPolySpec& spec, const Cycle& cycle, std::uint32_t p);

// Coefficient of x^{lp-1} in x^alpha (1-x)^b:
// (-1)^{lp-1-alpha} C(b, lp-1-alpha), or 0 when that index is outside [0, b].
Fp beta_cycle_coefficient(const FpContext& ctx, std::int64_t alpha, std::int64_t b,
                          std::uint32_t l);

// Two-dimensional integral by expanding (x_1 - x_2)^{2c}; O(c) field operations.
Fp selberg_direct_2d(const FpContext& ctx, const SelbergParams& params, std::uint32_t l1,
                     std::uint32_t l2);

// Integral of x^a (1-x)^b over [1]_p: -a! b!/(a+b-p+1)! if a+b >= p-1, else 0.
// Requires 0 <= a, b < p.
Fp beta_closed(const FpContext& ctx, std::int64_t a, std::int64_t b);

// Product formula for the integral of Phi_n over [1,...,1]_p. Valid when
// p-1 <= a+b+(n-1)c and a+b+(2n-2)c < 2p-1; DomainError otherwise.
FactorialRatio selberg_nd_formula(std::uint32_t p, std::size_t n, std::int64_t a, std::int64_t b,
                                  std::int64_t c);
Fp selberg_nd_closed(const FpContext& ctx, std::size_t n, std::int64_t a, std::int64_t b,
                     std::int64_t c);

enum class MomentKind { S1, S2 };

// Integral of (x_1 + x_2) Phi (S1) or ((1 - x_1) + (1 - x_2)) Phi (S2).
Fp moment_integral(const FpContext& ctx, const SelbergParams& params, const Cycle& cycle,
                   MomentKind kind);

} // namespace fpselberg
