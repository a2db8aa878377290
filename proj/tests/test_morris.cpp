#include "fpselberg/errors.hpp"
#include "fpselberg/morris.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fpselberg;

TEST_CASE("Laurent polynomial basics") {
  const LaurentPoly x = LaurentPoly::monomial({1}, 1);
  const LaurentPoly xinv = LaurentPoly::monomial({-1}, 1);
  CHECK((x * xinv).constant_term() == 1);
  const LaurentPoly s = x + xinv;
  CHECK(pow(s, 4).constant_term() == 6);
  CHECK(pow(s, 0) == LaurentPoly::constant(1, 1));
  LaurentPoly z(1);
  z.add_term({2}, 3);
  z.add_term({2}, -3);
  CHECK(z.size() == 0);
}

TEST_CASE("Morris examples") {
  CHECK(morris_ct_bruteforce({2, 2, 1, 1}) == 12);
  CHECK(morris_rhs({2, 2, 1, 1}) == 12);
  CHECK(morris_lhs_symmetric_form({2, 2, 1, 1}) == 12);
  CHECK(morris_rhs({1, 0, 0, 0}) == 1);
  CHECK(morris_rhs({2, 0, 0, 1}) == 2);
}

TEST_CASE("one variable reduces to a binomial") {
  for (std::uint32_t alpha = 0; alpha <= 4; ++alpha)
    for (std::uint32_t beta = 0; beta <= 4; ++beta) {
      CHECK(morris_rhs({1, alpha, beta, 0}) == oracle::pascal(alpha + beta, alpha));
      CHECK(morris_ct_bruteforce({1, alpha, beta, 0}) == oracle::pascal(alpha + beta, alpha));
    }
}

TEST_CASE("identity for n <= 2") {
  for (std::uint32_t n = 1; n <= 2; ++n)
    for (std::uint32_t alpha = 0; alpha <= 3; ++alpha)
      for (std::uint32_t beta = 0; beta <= 3; ++beta)
        for (std::uint32_t gamma = 0; gamma <= 3; ++gamma) {
          const MorrisParams mp{n, alpha, beta, gamma};
          const BigInt rhs = morris_rhs(mp);
          CHECK(morris_ct_bruteforce(mp) == rhs);
          CHECK(morris_lhs_symmetric_form(mp) == rhs);
        }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(morris_ct_bruteforce({4, 1, 1, 1}), ResourceError);
  CHECK_THROWS_AS(morris_ct_bruteforce({2, 5, 1, 1}), ResourceError);
  CHECK_THROWS(morris_rhs({0, 1, 1, 1}));
}

TEST_CASE("bridge to the [1,1] integral") {
  const SelbergParams s(7, 3, 4, 3);
  const auto mp = morris_params_cycle11(s);
  REQUIRE(mp.has_value());
  CHECK(mp->n == 2);
  CHECK(mp->alpha == 3 + 4 + 3 + 1 - 7);
  CHECK(mp->beta == 7 - 1 - 3 - 3);
  CHECK(mp->gamma == 3);
  CHECK(oracle::mod(selberg_from_morris(s, *mp), 7) == 1);
  CHECK_FALSE(morris_params_cycle11(SelbergParams(7, 1, 1, 1)).has_value());
}

TEST_CASE("bridge agrees with the oracle wherever it applies") {
  for (std::uint32_t p : {5u, 7u})
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        for (std::uint32_t c = 1; c < p; ++c) {
          const SelbergParams s(p, a, b, c);
          if (auto mp = morris_params_cycle11(s); mp && mp->alpha <= kMorrisMaxExponent &&
                                                  mp->beta <= kMorrisMaxExponent &&
                                                  mp->gamma <= kMorrisMaxExponent)
            CHECK(oracle::mod(selberg_from_morris(s, *mp), p) ==
                  oracle::mod(oracle::selberg_integer(p, a, b, c, 1, 1), p));
          if (auto mp = morris_params_cycle22(s); mp && mp->alpha <= kMorrisMaxExponent &&
                                                  mp->beta <= kMorrisMaxExponent &&
                                                  mp->gamma <= kMorrisMaxExponent)
            CHECK(oracle::mod(selberg_from_morris(s, *mp), p) ==
                  oracle::mod(oracle::selberg_integer(p, a, b, c, 2, 2), p));
        }
}
