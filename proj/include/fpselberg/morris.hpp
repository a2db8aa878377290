#pragma once

#include "fpselberg/bigint.hpp"
#include "fpselberg/selberg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace fpselberg {

// Exact-integer Laurent polynomial; exponents may be negative.
class LaurentPoly {
public:
  using Exps = std::vector<std::int32_t>;

  explicit LaurentPoly(std::size_t num_vars);
  static LaurentPoly constant(std::size_t num_vars, BigInt c);
  static LaurentPoly monomial(Exps e, BigInt c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Exps, BigInt>& terms() const noexcept { return terms_; }

  void add_term(const Exps& e, const BigInt& c);
  BigInt coefficient(const Exps& e) const;
  BigInt constant_term() const { return coefficient(Exps(num_vars_, 0)); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  std::size_t num_vars_;
  std::map<Exps, BigInt> terms_;
};

LaurentPoly pow(const LaurentPoly& base, std::uint32_t e);

struct MorrisParams {
  std::uint32_t n = 1;
  std::uint32_t alpha = 0, beta = 0, gamma = 0;
};

// Expansion guard for the constant-term evaluators.
inline constexpr std::uint32_t kMorrisMaxDim = 3;
inline constexpr std::uint32_t kMorrisMaxExponent = 4;

// CT prod_i (1-x_i)^alpha (1-1/x_i)^beta prod_{j != k} (1 - x_j/x_k)^gamma.
BigInt morris_ct_bruteforce(const MorrisParams& mp);

// prod_{j=1}^n (j gamma)!/gamma! * (alpha+beta+(j-1)gamma)! /
//   ((alpha+(j-1)gamma)! (beta+(j-1)gamma)!)
BigInt morris_rhs(const MorrisParams& mp);

// CT (-1)^{C(n,2) gamma + n beta} prod_{i<j} (x_i-x_j)^{2 gamma}
//      prod_i x_i^{-beta-(n-1)gamma} (1-x_i)^{alpha+beta}
BigInt morris_lhs_symmetric_form(const MorrisParams& mp);

// Substitutions turning S(a,b,c;1,1) and S(a,b,c;2,2) into a two-variable
// Morris constant term; empty when an exponent would be negative.
//   [1,1]: (alpha, beta, gamma) = (a+b+c+1-p, p-1-a-c, c)
//   [2,2]: (alpha, beta, gamma) = (a+b+c+1-2p, 2p-1-a-c, c)
std::optional<MorrisParams> morris_params_cycle11(const SelbergParams& params);
std::optional<MorrisParams> morris_params_cycle22(const SelbergParams& params);

// S = (-1)^c * morris_rhs(substitution), an exact integer.
BigInt selberg_from_morris(const SelbergParams& params, const MorrisParams& mp);

} // namespace fpselberg
