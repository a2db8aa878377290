#include "fpselberg/selberg.hpp"

#include "fpselberg/errors.hpp"

#include <string>

namespace fpselberg {

namespace {

template <class Ring>
MultiPoly<Ring> build_master(const Ring& ring, const MasterPolySpec& spec) {
  const std::size_t n = spec.n;
  auto one = MultiPoly<Ring>::constant(ring, n, ring.one());
  auto phi = one;
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = MultiPoly<Ring>::variable(ring, n, i);
    Exponents e(n, 0);
    e[i] = spec.a;
    auto factor = MultiPoly<Ring>::monomial(ring, e, ring.one()) * power(one - xi, spec.b);
    phi = phi * factor;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto diff = MultiPoly<Ring>::variable(ring, n, i) - MultiPoly<Ring>::variable(ring, n, j);
      phi = phi * power(diff, 2 * std::uint64_t{spec.c});
    }
  }
  return phi;
}

void check_cycle_arity(const MasterPolySpec& spec, const Cycle& cycle) {
  if (cycle.size() != spec.n)
    throw ArityError("cycle " + cycle.to_string() + " does not match dimension " +
                     std::to_string(spec.n));
}

} // namespace

SelbergParams::SelbergParams(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c)
    : p_(p) {
  if (p == 2 || !is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
  auto check = [p](const char* name, std::int64_t v) {
    if (v <= 0 || v >= static_cast<std::int64_t>(p))
      throw DomainError(std::string(name) + " = " + std::to_string(v) + " must satisfy 0 < " +
                        name + " < p = " + std::to_string(p));
    return static_cast<std::uint32_t>(v);
  };
  a_ = check("a", a);
  b_ = check("b", b);
  c_ = check("c", c);
}

MasterPolySpec::MasterPolySpec(std::size_t n_, std::uint32_t a_, std::uint32_t b_,
                               std::uint32_t c_)
    : n(n_), a(a_), b(b_), c(c_) {
  if (n == 0) throw DomainError("master polynomial dimension must be at least 1");
}

FpPoly master_polynomial(const MasterPolySpec& spec, std::uint32_t p) {
  return build_master(FpRing{p}, spec);
}

IntPoly master_polynomial_exact(const MasterPolySpec& spec) {
  return build_master(IntegerRing{}, spec);
}

void check_bruteforce_budget(std::size_t n, std::uint32_t p) {
  if (n > 3 || (n == 3 && p > 11))
    throw ResourceError("brute force in dimension " + std::to_string(n) + " at p = " +
                        std::to_string(p) + " exceeds the cap (n <= 3, p <= 11 for n = 3)");
}

Fp selberg_bruteforce(const FpContext& ctx, const MasterPolySpec& spec, const Cycle& cycle) {
  check_cycle_arity(spec, cycle);
  check_bruteforce_budget(spec.n, ctx.p());
  return fp_integral(master_polynomial(spec, ctx.p()), cycle);
}

BigInt selberg_bruteforce_exact(const MasterPolySpec& spec, const Cycle& cycle, std::uint32_t p) {
  check_cycle_arity(spec, cycle);
  check_bruteforce_budget(spec.n, p);
  return cycle_coefficient(master_polynomial_exact(spec), cycle, p);
}

Fp beta_cycle_coefficient(const FpContext& ctx, std::int64_t alpha, std::int64_t b,
                          std::uint32_t l) {
  const std::int64_t k = std::int64_t{l} * ctx.p() - 1 - alpha;
  if (k < 0 || k > b) return ctx.zero();
  return ctx.mul(ctx.sign(k), ctx.binomial_lucas(static_cast<std::uint64_t>(b),
                                                 static_cast<std::uint64_t>(k)));
}

Fp selberg_direct_2d(const FpContext& ctx, const SelbergParams& params, std::uint32_t l1,
                     std::uint32_t l2) {
  if (params.p() != ctx.p()) throw ArityError("parameters and context use different primes");
  if (l1 == 0 || l2 == 0) throw DomainError("cycle entries must be positive");
  const std::int64_t a = params.a(), b = params.b(), two_c = 2 * std::int64_t{params.c()};
  // (x1 - x2)^{2c} = sum_k (-1)^k C(2c, k) x1^{2c-k} x2^k
  Fp sum = ctx.zero();
  for (std::int64_t k = 0; k <= two_c; ++k) {
    const Fp first = beta_cycle_coefficient(ctx, a + two_c - k, b, l1);
    if (first.v == 0) continue;
    const Fp second = beta_cycle_coefficient(ctx, a + k, b, l2);
    if (second.v == 0) continue;
    const Fp binom = ctx.binomial_lucas(static_cast<std::uint64_t>(two_c),
                                        static_cast<std::uint64_t>(k));
    sum = ctx.add(sum, ctx.mul(ctx.sign(k), ctx.mul(binom, ctx.mul(first, second))));
  }
  return sum;
}

Fp beta_closed(const FpContext& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t p = ctx.p();
  if (a < 0 || a >= p || b < 0 || b >= p)
    throw DomainError("beta integral needs 0 <= a, b < p");
  if (a + b < p - 1) return ctx.zero();
  return FactorialRatio{-1, {a, b}, {a + b - p + 1}}.evaluate(ctx);
}

FactorialRatio selberg_nd_formula(std::uint32_t p_, std::size_t n_, std::int64_t a,
                                  std::int64_t b, std::int64_t c) {
  const auto p = static_cast<std::int64_t>(p_);
  const auto n = static_cast<std::int64_t>(n_);
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (a < 0 || b < 0 || c < 0) throw DomainError("a, b, c must be non-negative");
  if (!(p - 1 <= a + b + (n - 1) * c) || !(a + b + (2 * n - 2) * c < 2 * p - 1))
    throw DomainError("product formula needs p-1 <= a+b+(n-1)c and a+b+(2n-2)c < 2p-1");

  FactorialRatio r;
  r.sign = n % 2 == 0 ? 1 : -1;
  for (std::int64_t j = 1; j <= n; ++j) {
    // (jc)!/c! is identically 1 for j = 1
    if (j > 1) {
      r.numerator.push_back(j * c);
      r.denominator.push_back(c);
    }
    r.numerator.push_back(a + (j - 1) * c);
    r.numerator.push_back(b + (j - 1) * c);
    r.denominator.push_back(a + b + (n + j - 2) * c + 1 - p);
  }
  for (auto arg : r.numerator)
    if (arg > 4 * p)
      throw DomainError("factorial argument " + std::to_string(arg) + " exceeds 4p");
  return r;
}

Fp selberg_nd_closed(const FpContext& ctx, std::size_t n, std::int64_t a, std::int64_t b,
                     std::int64_t c) {
  return selberg_nd_formula(ctx.p(), n, a, b, c).evaluate(ctx);
}

Fp moment_integral(const FpContext& ctx, const SelbergParams& params, const Cycle& cycle,
                   MomentKind kind) {
  if (params.p() != ctx.p()) throw ArityError("parameters and context use different primes");
  const MasterPolySpec spec(2, params);
  check_cycle_arity(spec, cycle);
  const FpRing ring{ctx.p()};
  const auto x1 = FpPoly::variable(ring, 2, 0);
  const auto x2 = FpPoly::variable(ring, 2, 1);
  FpPoly weight = x1 + x2;
  if (kind == MomentKind::S2) weight = FpPoly::constant(ring, 2, 2 % ctx.p()) - weight;
  return fp_integral(weight * master_polynomial(spec, ctx.p()), cycle);
}

} // namespace fpselberg
