#include "fpselberg/errors.hpp"
#include "fpselberg/factorial_ratio.hpp"
#include "fpselberg/modp.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fpselberg;

namespace {
const std::vector<std::uint32_t> kPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
}

TEST_CASE("context rejects non-primes and 2") {
  CHECK_THROWS_AS(FpContext(4), DomainError);
  CHECK_THROWS_AS(FpContext(2), DomainError);
  CHECK_THROWS_AS(FpContext(1), DomainError);
  CHECK_THROWS_AS(FpContext(0), DomainError);
  CHECK_THROWS_AS(FpContext(91), DomainError);
  CHECK_NOTHROW(FpContext(97));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("factorial") {
  const FpContext f5(5), f7(7);
  CHECK(f5.factorial(4).v == 4);
  CHECK(f5.factorial(5).v == 0);
  CHECK(f7.factorial(6).v == 6);
  CHECK(f5.factorial(0).v == 1);
  CHECK(f5.factorial(20).v == 0);
  CHECK_THROWS_AS(f5.factorial(21), RangeError);
  CHECK_THROWS_AS(f5.factorial(-1), RangeError);
}

TEST_CASE("factorial table vanishes exactly from p on") {
  for (auto p : kPrimes) {
    const FpContext ctx(p);
    for (std::int64_t n = 0; n <= ctx.factorial_bound(); ++n)
      CHECK((ctx.factorial(n).v == 0) == (n >= p));
  }
}

TEST_CASE("inverse factorial guards its range") {
  const FpContext ctx(7);
  for (std::int64_t n = 0; n < 7; ++n) CHECK(ctx.mul(ctx.factorial(n), ctx.inv_factorial(n)).v == 1);
  CHECK_THROWS_AS(ctx.inv_factorial(7), GuardError);
  CHECK_THROWS_AS(ctx.inv_factorial(-1), GuardError);
  CHECK_THROWS_AS((FactorialRatio{1, {2}, {7}}.evaluate(ctx)), GuardError);
}

TEST_CASE("binomial_lucas examples") {
  const FpContext ctx(5);
  CHECK(ctx.binomial_lucas(5, 1).v == 0);
  CHECK(ctx.binomial_lucas(7, 3).v == 0);
  CHECK(ctx.binomial_lucas(6, 1).v == 1);
  CHECK(ctx.binomial_lucas(3, 4).v == 0);
  CHECK(ctx.binomial_lucas(0, 0).v == 1);
}

TEST_CASE("binomial_lucas matches Pascal's triangle for n <= 4p") {
  for (auto p : {3u, 5u, 7u, 11u, 13u}) {
    const FpContext ctx(p);
    for (std::int64_t n = 0; n <= 4 * std::int64_t{p}; ++n)
      for (std::int64_t m = 0; m <= n; ++m)
        REQUIRE(ctx.binomial_lucas(n, m).v == oracle::mod(oracle::pascal(n, m), p));
  }
}

TEST_CASE("binomial_lucas on large arguments") {
  std::mt19937_64 rng(7);
  const FpContext ctx(13);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() % 600;
    const std::uint64_t m = rng() % (n + 1);
    CHECK(ctx.binomial_lucas(n, m).v == reduce_mod(big_binomial(n, m), 13));
  }
}

TEST_CASE("inverse") {
  const FpContext ctx(7);
  CHECK(ctx.inverse(Fp{3}).v == 5);
  CHECK(ctx.inverse(Fp{1}).v == 1);
  CHECK_THROWS_AS(ctx.inverse(Fp{0}), DomainError);
  for (auto p : kPrimes) {
    const FpContext f(p);
    for (std::uint32_t x = 1; x < p; ++x) CHECK(f.mul(Fp{x}, f.inverse(Fp{x})).v == 1);
  }
}

TEST_CASE("field operations stay canonical") {
  std::mt19937_64 rng(11);
  for (auto p : kPrimes) {
    const FpContext ctx(p);
    for (int i = 0; i < 100; ++i) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % 1000) - 500;
      const std::int64_t y = static_cast<std::int64_t>(rng() % 1000) - 500;
      const Fp fx = ctx.from_int(x), fy = ctx.from_int(y);
      CHECK(fx.v < p);
      CHECK(ctx.add(fx, fy) == ctx.from_int(x + y));
      CHECK(ctx.sub(fx, fy) == ctx.from_int(x - y));
      CHECK(ctx.mul(fx, fy) == ctx.from_int(x * y));
      CHECK(ctx.add(fx, ctx.neg(fx)).v == 0);
    }
  }
}

TEST_CASE("Wilson: (p-1)! = -1") {
  for (auto p : kPrimes) CHECK(FpContext(p).factorial(p - 1).v == p - 1);
}

TEST_CASE("a! b! = (-1)^{a+1} when a + b = p - 1") {
  for (auto p : kPrimes) {
    const FpContext ctx(p);
    for (std::int64_t a = 0; a <= p - 1; ++a)
      CHECK(ctx.mul(ctx.factorial(a), ctx.factorial(p - 1 - a)) == ctx.sign(a + 1));
  }
}

TEST_CASE("b C(b-1, p-a-1) = (-1)^{a+1} a! b!/(a+b-p)! for a + b >= p") {
  for (auto p : kPrimes) {
    const FpContext ctx(p);
    const std::int64_t P = p;
    for (std::int64_t a = 1; a < P; ++a)
      for (std::int64_t b = P - a; b < P; ++b) {
        const Fp rhs = ctx.mul(ctx.sign(a + 1),
                               ctx.mul(ctx.mul(ctx.factorial(a), ctx.factorial(b)),
                                       ctx.inverse(ctx.factorial(a + b - P))));
        CHECK(ctx.mul(ctx.from_int(b), ctx.binomial_lucas(b - 1, P - a - 1)) == rhs);
        CHECK(ctx.mul(ctx.from_int(b), ctx.binomial_lucas(b - 1, a + b - P)) == rhs);
      }
  }
}

TEST_CASE("factorial ratio formatting") {
  CHECK(FactorialRatio{-1, {6, 3}, {2, 0}}.to_string() == "-(6)!*(3)!/((2)!*(0)!)");
  CHECK(FactorialRatio{1, {}, {}}.to_string() == "1");
  const FpContext ctx(7);
  CHECK(FactorialRatio{-1, {3, 3}, {0}}.evaluate(ctx).v == 6);
}
