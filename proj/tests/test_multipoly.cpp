#include "fpselberg/errors.hpp"
#include "fpselberg/multipoly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace fpselberg;

namespace {

IntPoly xi(std::size_t n, std::size_t i) { return IntPoly::variable(IntegerRing{}, n, i); }
IntPoly one(std::size_t n) { return IntPoly::constant(IntegerRing{}, n, 1); }

IntPoly random_int_poly(std::mt19937_64& rng, std::size_t n, std::uint32_t max_deg, int terms) {
  IntPoly P(IntegerRing{}, n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_deg + 1));
    P.add_term(e, BigInt(static_cast<std::int64_t>(rng() % 41) - 20));
  }
  return P;
}

oracle::NaivePoly to_naive(const IntPoly& P) {
  oracle::NaivePoly r;
  for (const auto& [e, c] : P.terms()) r[e] = c;
  return r;
}

struct EnvGuard {
  explicit EnvGuard(const char* v) { ::setenv("FPSELBERG_MAX_TERMS", v, 1); }
  ~EnvGuard() { ::unsetenv("FPSELBERG_MAX_TERMS"); }
};

} // namespace

TEST_CASE("multiply examples") {
  const IntPoly x1 = xi(2, 0), x2 = xi(2, 1);
  const IntPoly prod = (x1 - x2) * (x1 + x2);
  CHECK(prod == x1 * x1 - x2 * x2);
  CHECK(prod.size() == 2);
  CHECK(prod * one(2) == prod);

  const IntPoly y = xi(1, 0);
  const IntPoly cube = power(one(1) - y, 3);
  CHECK((cube * cube).coefficient({3}) == -20);
  const FpPoly fy = reduce(cube, 7);
  CHECK((fy * fy).coefficient({3}) == 1);
}

TEST_CASE("power") {
  const IntPoly x1 = xi(2, 0), x2 = xi(2, 1);
  const IntPoly sq = power(x1 - x2, 2);
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK(sq.coefficient({1, 1}) == -2);
  CHECK(sq.coefficient({0, 2}) == 1);
  CHECK(power(x1, 0) == one(2));
  const FpPoly f = reduce(power(one(1) + xi(1, 0), 5), 5);
  CHECK(f.size() == 2);
  CHECK(f.coefficient({5}) == 1);
}

TEST_CASE("fp_integral examples") {
  const FpRing r{5};
  const FpPoly P = FpPoly::monomial(r, {4}, 3);
  CHECK(fp_integral(P, Cycle{1}).v == 3);
  CHECK(fp_integral(P, Cycle{2}).v == 0);
  const FpPoly Q = FpPoly::monomial(r, {4, 9}, 2);
  CHECK(fp_integral(Q, Cycle{1, 2}).v == 2);
  CHECK_THROWS_AS(fp_integral(Q, Cycle{1}), ArityError);
}

TEST_CASE("partial derivative") {
  const IntPoly x1 = xi(2, 0), x2 = xi(2, 1);
  const IntPoly P = power(x1, 3) * x2 + x2;
  const IntPoly d0 = partial_derivative(P, 0);
  CHECK(d0.coefficient({2, 1}) == 3);
  CHECK(d0.size() == 1);
  CHECK(partial_derivative(P, 1) == power(x1, 3) + one(2));
  CHECK_THROWS_AS(partial_derivative(P, 2), ArityError);
  const FpPoly F = reduce(power(x1, 7), 7);
  CHECK(partial_derivative(F, 0).is_zero());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(IntPoly(IntegerRing{}, 0), ArityError);
  CHECK_THROWS_AS(xi(2, 0) + xi(3, 0), ArityError);
  CHECK_THROWS_AS(xi(2, 0) * xi(3, 0), ArityError);
  const FpPoly a = FpPoly::variable(FpRing{5}, 1, 0);
  const FpPoly b = FpPoly::variable(FpRing{7}, 1, 0);
  CHECK_THROWS(a + b);
  CHECK_THROWS(a * b);
  CHECK_THROWS_AS(Cycle({1, 0}), DomainError);
  CHECK_THROWS_AS(Cycle(std::vector<std::uint32_t>{}), DomainError);
  CHECK_THROWS_AS(IntPoly::variable(IntegerRing{}, 2, 2), ArityError);
}

TEST_CASE("cancellation leaves no stored zeros") {
  const IntPoly x = xi(2, 0);
  CHECK((x - x).is_zero());
  FpPoly f(FpRing{3}, 1);
  f.add_term({2}, 1);
  f.add_term({2}, 2);
  CHECK(f.is_zero());
  const FpPoly g = reduce(power(one(1) + xi(1, 0), 3), 3);
  for (const auto& [e, c] : g.terms()) CHECK(c != 0);
}

TEST_CASE("cycle") {
  const Cycle c{1, 2};
  CHECK(c.exponents(7) == Exponents{6, 13});
  CHECK(c.to_string() == "[1,2]");
}

TEST_CASE("multiply agrees with the naive double loop") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const IntPoly A = random_int_poly(rng, n, 6, 1 + static_cast<int>(rng() % 8));
    const IntPoly B = random_int_poly(rng, n, 6, 1 + static_cast<int>(rng() % 8));
    REQUIRE(to_naive(A * B) == oracle::naive_multiply(to_naive(A), to_naive(B)));
  }
}

TEST_CASE("F_p arithmetic commutes with reduction") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const IntPoly A = random_int_poly(rng, n, 5, 6);
      const IntPoly B = random_int_poly(rng, n, 5, 6);
      CHECK(reduce(A * B, p) == reduce(A, p) * reduce(B, p));
      CHECK(reduce(A + B, p) == reduce(A, p) + reduce(B, p));
      CHECK(reduce(power(A, 3), p) == power(reduce(A, p), 3));
    }
  }
}

TEST_CASE("integral of a partial derivative vanishes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[trial % 3];
    const std::size_t n = 1 + trial % 2;
    const FpPoly P = reduce(random_int_poly(rng, n, 3 * p, 12), p);
    std::vector<std::uint32_t> l(n);
    for (auto& x : l) x = 1 + static_cast<std::uint32_t>(rng() % 3);
    for (std::size_t i = 0; i < n; ++i)
      REQUIRE(fp_integral(partial_derivative(P, i), Cycle(l)).v == 0);
  }
}

TEST_CASE("fp_integral is linear") {
  std::mt19937_64 rng(4);
  const std::uint32_t p = 7;
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly P = reduce(random_int_poly(rng, 2, 20, 15), p);
    const FpPoly Q = reduce(random_int_poly(rng, 2, 20, 15), p);
    const std::uint32_t s = static_cast<std::uint32_t>(rng() % p);
    const Cycle cyc{1 + static_cast<std::uint32_t>(rng() % 3), 1 + static_cast<std::uint32_t>(rng() % 3)};
    const std::uint32_t lhs = fp_integral(P.scaled(s) + Q, cyc).v;
    const std::uint32_t rhs = (s * fp_integral(P, cyc).v + fp_integral(Q, cyc).v) % p;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("swap_variables") {
  const IntPoly x1 = xi(2, 0), x2 = xi(2, 1);
  const IntPoly P = power(x1, 2) * x2 + x2;
  CHECK(swap_variables(P, 0, 1) == power(x2, 2) * x1 + x1);
  CHECK(swap_variables(swap_variables(P, 0, 1), 0, 1) == P);
}

TEST_CASE("term budget raises ResourceError") {
  const IntPoly A = power(one(2) + xi(2, 0) + xi(2, 1), 3);
  EnvGuard guard("5");
  CHECK(max_terms() == 5);
  CHECK_THROWS_AS(A * A, ResourceError);
}

TEST_CASE("default term budget") {
  ::unsetenv("FPSELBERG_MAX_TERMS");
  CHECK(max_terms() == kDefaultMaxTerms);
}
