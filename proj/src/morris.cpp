#include "fpselberg/morris.hpp"

#include "fpselberg/errors.hpp"

#include <string>

namespace fpselberg {

LaurentPoly::LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars_ == 0) throw ArityError("Laurent polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, BigInt c) {
  LaurentPoly r(num_vars);
  r.add_term(Exps(num_vars, 0), c);
  return r;
}

LaurentPoly LaurentPoly::monomial(Exps e, BigInt c) {
  LaurentPoly r(e.size());
  r.add_term(e, c);
  return r;
}

void LaurentPoly::add_term(const Exps& e, const BigInt& c) {
  if (e.size() != num_vars_) throw ArityError("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.num_vars_ != num_vars_) throw ArityError("Laurent polynomials differ in arity");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw ArityError("Laurent polynomials differ in arity");
  LaurentPoly r(a.num_vars_);
  LaurentPoly::Exps e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly pow(const LaurentPoly& base, std::uint32_t e) {
  // Factors here are binomials, so repeated multiplication by the small base
  // beats squaring the growing accumulator.
  LaurentPoly r = LaurentPoly::constant(base.num_vars(), 1);
  for (std::uint32_t i = 0; i < e; ++i) r = r * base;
  return r;
}

namespace {

void check_guard(const MorrisParams& mp) {
  if (mp.n == 0) throw DomainError("Morris dimension must be at least 1");
  if (mp.n > kMorrisMaxDim || mp.alpha > kMorrisMaxExponent || mp.beta > kMorrisMaxExponent ||
      mp.gamma > kMorrisMaxExponent)
    throw ResourceError("constant-term expansion capped at n <= " +
                        std::to_string(kMorrisMaxDim) + " and alpha, beta, gamma <= " +
                        std::to_string(kMorrisMaxExponent));
}

// 1 + s * x^e1 * y^e2 style binomial: 1 + coeff * monomial(exps)
LaurentPoly one_plus(std::size_t n, LaurentPoly::Exps exps, int coeff) {
  LaurentPoly r = LaurentPoly::constant(n, 1);
  r.add_term(exps, coeff);
  return r;
}

} // namespace

BigInt morris_ct_bruteforce(const MorrisParams& mp) {
  check_guard(mp);
  const std::size_t n = mp.n;
  LaurentPoly acc = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly::Exps up(n, 0), down(n, 0);
    up[i] = 1;
    down[i] = -1;
    acc = acc * pow(one_plus(n, up, -1), mp.alpha);
    acc = acc * pow(one_plus(n, down, -1), mp.beta);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      LaurentPoly::Exps ratio(n, 0);
      ratio[j] = 1;
      ratio[k] = -1;
      acc = acc * pow(one_plus(n, ratio, -1), mp.gamma);
    }
  }
  return acc.constant_term();
}

BigInt morris_rhs(const MorrisParams& mp) {
  if (mp.n == 0) throw DomainError("Morris dimension must be at least 1");
  const std::uint64_t al = mp.alpha, be = mp.beta, ga = mp.gamma;
  BigInt num = 1, den = 1;
  for (std::uint64_t j = 1; j <= mp.n; ++j) {
    num *= big_factorial(j * ga) * big_factorial(al + be + (j - 1) * ga);
    den *= big_factorial(ga) * big_factorial(al + (j - 1) * ga) * big_factorial(be + (j - 1) * ga);
  }
  if (num % den != 0) throw GuardError("Morris product is not an integer");
  return num / den;
}

BigInt morris_lhs_symmetric_form(const MorrisParams& mp) {
  check_guard(mp);
  const std::size_t n = mp.n;
  const std::int64_t shift = -static_cast<std::int64_t>(mp.beta) -
                             static_cast<std::int64_t>(n - 1) * mp.gamma;
  LaurentPoly acc = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly::Exps e(n, 0);
    e[i] = static_cast<std::int32_t>(shift);
    acc = acc * LaurentPoly::monomial(e, 1);
    LaurentPoly::Exps up(n, 0);
    up[i] = 1;
    acc = acc * pow(one_plus(n, up, -1), mp.alpha + mp.beta);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LaurentPoly diff(n);
      LaurentPoly::Exps xi(n, 0), xj(n, 0);
      xi[i] = 1;
      xj[j] = 1;
      diff.add_term(xi, 1);
      diff.add_term(xj, -1);
      acc = acc * pow(diff, 2 * mp.gamma);
    }
  }
  const std::uint64_t sign_exp = std::uint64_t{n} * (n - 1) / 2 * mp.gamma + std::uint64_t{n} * mp.beta;
  BigInt ct = acc.constant_term();
  return sign_exp % 2 == 0 ? ct : BigInt(-ct);
}

std::optional<MorrisParams> morris_params_cycle11(const SelbergParams& s) {
  const std::int64_t p = s.p(), a = s.a(), b = s.b(), c = s.c();
  const std::int64_t alpha = a + b + c + 1 - p, beta = p - 1 - a - c;
  if (alpha < 0 || beta < 0) return std::nullopt;
  return MorrisParams{2, static_cast<std::uint32_t>(alpha), static_cast<std::uint32_t>(beta),
                      static_cast<std::uint32_t>(c)};
}

std::optional<MorrisParams> morris_params_cycle22(const SelbergParams& s) {
  const std::int64_t p = s.p(), a = s.a(), b = s.b(), c = s.c();
  const std::int64_t alpha = a + b + c + 1 - 2 * p, beta = 2 * p - 1 - a - c;
  if (alpha < 0 || beta < 0) return std::nullopt;
  return MorrisParams{2, static_cast<std::uint32_t>(alpha), static_cast<std::uint32_t>(beta),
                      static_cast<std::uint32_t>(c)};
}

BigInt selberg_from_morris(const SelbergParams& params, const MorrisParams& mp) {
  BigInt v = morris_rhs(mp);
  return params.c() % 2 == 0 ? v : BigInt(-v);
}

} // namespace fpselberg
