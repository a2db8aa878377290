#include "fpselberg/errors.hpp"
#include "fpselberg/selberg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fpselberg;

namespace {
const std::vector<std::uint32_t> kSmallPrimes{3, 5, 7};
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SelbergParams(7, 0, 1, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(7, 9, 1, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(7, 1, 7, 1), DomainError);
  CHECK_THROWS_AS(SelbergParams(7, 1, 1, -1), DomainError);
  CHECK_THROWS_AS(SelbergParams(8, 1, 1, 1), DomainError);
  try {
    SelbergParams(7, 9, 1, 1);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("a = 9") != std::string::npos);
  }
  CHECK(SelbergParams(7, 3, 4, 3).delta() == 0);
  CHECK(SelbergParams(7, 6, 6, 6).delta() == 11);
}

TEST_CASE("master polynomial examples") {
  const FpPoly phi1 = master_polynomial(MasterPolySpec(1, 1, 1, 0), 7);
  CHECK(phi1.coefficient({1}) == 1);
  CHECK(phi1.coefficient({2}) == 6);
  CHECK(phi1.size() == 2);

  const IntPoly phi2 = master_polynomial_exact(MasterPolySpec(2, 1, 0, 1));
  CHECK(phi2.coefficient({3, 1}) == 1);
  CHECK(phi2.coefficient({2, 2}) == -2);
  CHECK(phi2.coefficient({1, 3}) == 1);
  CHECK(phi2.size() == 3);
}

TEST_CASE("master polynomial is symmetric") {
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t c = 0; c < 3; ++c) {
      const IntPoly phi = master_polynomial_exact(MasterPolySpec(2, a, 2, c));
      CHECK(swap_variables(phi, 0, 1) == phi);
    }
  const IntPoly phi3 = master_polynomial_exact(MasterPolySpec(3, 1, 1, 1));
  CHECK(swap_variables(phi3, 0, 2) == phi3);
  CHECK(swap_variables(phi3, 1, 2) == phi3);
}

TEST_CASE("master polynomial matches the two-variable oracle") {
  const std::uint32_t a = 3, b = 2, c = 2;
  const IntPoly phi = master_polynomial_exact(MasterPolySpec(2, a, b, c));
  for (std::uint32_t e1 = 0; e1 <= a + b + 2 * c; ++e1)
    for (std::uint32_t e2 = 0; e2 <= a + b + 2 * c; ++e2)
      CHECK(phi.coefficient({e1, e2}) == oracle::phi_coefficient(a, b, c, e1, e2));
}

TEST_CASE("brute force examples") {
  const FpContext ctx(7);
  CHECK(selberg_bruteforce(ctx, MasterPolySpec(2, 3, 4, 3), Cycle{1, 1}).v == 1);
  CHECK(selberg_bruteforce(ctx, MasterPolySpec(2, 1, 1, 1), Cycle{1, 1}).v == 0);
  CHECK(selberg_bruteforce(ctx, MasterPolySpec(2, 6, 6, 3), Cycle{2, 2}).v == 5);
  CHECK(selberg_bruteforce(ctx, MasterPolySpec(2, 6, 6, 6), Cycle{2, 2}).v == 5);
  CHECK(selberg_bruteforce_exact(MasterPolySpec(2, 6, 6, 3), Cycle{2, 2}, 7) == -1080);
  CHECK(oracle::selberg_integer(7, 6, 6, 3, 2, 2) == -1080);
  CHECK_THROWS_AS(selberg_bruteforce(ctx, MasterPolySpec(2, 1, 1, 1), Cycle{1}), ArityError);
}

TEST_CASE("brute force budget") {
  CHECK_NOTHROW(check_bruteforce_budget(3, 11));
  CHECK_THROWS_AS(check_bruteforce_budget(3, 13), ResourceError);
  CHECK_THROWS_AS(check_bruteforce_budget(4, 3), ResourceError);
  const FpContext ctx(13);
  CHECK_THROWS_AS(selberg_bruteforce(ctx, MasterPolySpec(3, 1, 1, 1), Cycle{1, 1, 1}), ResourceError);
}

TEST_CASE("exact integer integral agrees with the binomial-sum oracle") {
  for (std::uint32_t p : kSmallPrimes)
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        for (std::uint32_t c = 1; c < p; ++c)
          for (std::uint32_t l2 = 1; l2 <= 3; ++l2)
            for (std::uint32_t l1 = 1; l1 <= l2; ++l1)
              REQUIRE(selberg_bruteforce_exact(MasterPolySpec(2, a, b, c), Cycle{l1, l2}, p) ==
                      oracle::selberg_integer(p, a, b, c, l1, l2));
}

TEST_CASE("direct sum agrees with the oracle") {
  for (std::uint32_t p : kSmallPrimes) {
    const FpContext ctx(p);
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        for (std::uint32_t c = 1; c < p; ++c)
          for (std::uint32_t l2 = 1; l2 <= 4; ++l2)
            for (std::uint32_t l1 = 1; l1 <= 4; ++l1)
              REQUIRE(selberg_direct_2d(ctx, SelbergParams(p, a, b, c), l1, l2).v ==
                      oracle::mod(oracle::selberg_integer(p, a, b, c, l1, l2), p));
  }
}

TEST_CASE("beta_closed") {
  const FpContext ctx(7);
  CHECK(beta_closed(ctx, 3, 3).v == 6);
  CHECK(beta_closed(ctx, 0, 6).v == 1);
  CHECK(beta_closed(ctx, 2, 2).v == 0);
  CHECK_THROWS_AS(beta_closed(ctx, 7, 1), DomainError);
  CHECK_THROWS_AS(beta_closed(ctx, -1, 1), DomainError);
}

TEST_CASE("beta_closed matches the one-variable integral") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FpContext ctx(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        CHECK(beta_closed(ctx, a, b).v ==
              oracle::mod(oracle::univariate(a, b, std::int64_t{p} - 1), p));
  }
}

TEST_CASE("beta_cycle_coefficient") {
  const FpContext ctx(5);
  for (std::int64_t alpha = 0; alpha < 10; ++alpha)
    for (std::int64_t b = 0; b < 5; ++b)
      for (std::uint32_t l = 1; l <= 3; ++l)
        CHECK(beta_cycle_coefficient(ctx, alpha, b, l).v ==
              oracle::mod(oracle::univariate(alpha, b, 5 * l - 1), 5));
}

TEST_CASE("n-dimensional formula examples") {
  CHECK(selberg_nd_closed(FpContext(7), 1, 3, 3, 0).v == 6);
  const FpContext f7(7);
  CHECK(selberg_nd_closed(f7, 2, 3, 4, 1) == selberg_bruteforce(f7, MasterPolySpec(2, 3, 4, 1), Cycle{1, 1}));
  const FpContext f11(11);
  CHECK(selberg_nd_closed(f11, 3, 4, 4, 1) ==
        selberg_bruteforce(f11, MasterPolySpec(3, 4, 4, 1), Cycle{1, 1, 1}));
  CHECK(selberg_nd_closed(f11, 3, 4, 4, 1).v != 0);
  CHECK_THROWS_AS(selberg_nd_closed(f7, 3, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(selberg_nd_closed(f7, 2, 6, 6, 6), DomainError);
}

TEST_CASE("moment integrals match the shifted-coefficient oracle") {
  for (std::uint32_t p : {5u, 7u}) {
    const FpContext ctx(p);
    const std::int64_t P = p;
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        for (std::uint32_t c = 1; c < p; ++c)
          for (auto [l1, l2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            const SelbergParams params(p, a, b, c);
            const Cycle cyc{static_cast<std::uint32_t>(l1), static_cast<std::uint32_t>(l2)};
            const BigInt s1 = oracle::phi_coefficient(a, b, c, l1 * P - 2, l2 * P - 1) +
                              oracle::phi_coefficient(a, b, c, l1 * P - 1, l2 * P - 2);
            const BigInt s = oracle::selberg_integer(P, a, b, c, l1, l2);
            REQUIRE(moment_integral(ctx, params, cyc, MomentKind::S1).v == oracle::mod(s1, p));
            REQUIRE(moment_integral(ctx, params, cyc, MomentKind::S2).v ==
                    oracle::mod(2 * s - s1, p));
          }
  }
}

TEST_CASE("first moment recurrence at (7; 3,4,3)") {
  const FpContext ctx(7);
  const SelbergParams params(7, 3, 4, 3);
  const Fp s = selberg_bruteforce(ctx, MasterPolySpec(2, params), Cycle{1, 1});
  const Fp s1 = moment_integral(ctx, params, Cycle{1, 1}, MomentKind::S1);
  CHECK(ctx.mul(ctx.from_int(2 * (3 + 3 + 1)), s) == ctx.mul(ctx.from_int(3 + 4 + 6 + 2), s1));
}
