#pragma once

#include "fpselberg/bigint.hpp"
#include "fpselberg/errors.hpp"
#include "fpselberg/modp.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fpselberg {

using Exponents = std::vector<std::uint32_t>;

// Coefficients reduced mod p at every step.
struct FpRing {
  using Coeff = std::uint32_t;
  std::uint32_t p = 0;

  Coeff zero() const noexcept { return 0; }
  Coeff one() const noexcept { return 1; }
  bool is_zero(Coeff c) const noexcept { return c == 0; }
  Coeff from_int(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<Coeff>(r < 0 ? r + p : r);
  }
  Coeff add(Coeff x, Coeff y) const noexcept {
    Coeff s = x + y;
    return s >= p ? s - p : s;
  }
  Coeff sub(Coeff x, Coeff y) const noexcept { return x >= y ? x - y : x + p - y; }
  Coeff neg(Coeff x) const noexcept { return x == 0 ? 0 : p - x; }
  Coeff mul(Coeff x, Coeff y) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(x) * y % p);
  }
  // acc += x * y
  void fma(Coeff& acc, Coeff x, Coeff y) const noexcept {
    acc = static_cast<Coeff>((acc + static_cast<std::uint64_t>(x) * y) % p);
  }
  std::string name() const { return "F_" + std::to_string(p); }

  friend bool operator==(const FpRing&, const FpRing&) = default;
};

// Exact integers (arbitrary precision).
struct IntegerRing {
  using Coeff = BigInt;

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }
  bool is_zero(const Coeff& c) const { return c.is_zero(); }
  Coeff from_int(std::int64_t x) const { return Coeff(x); }
  Coeff add(const Coeff& x, const Coeff& y) const { return x + y; }
  Coeff sub(const Coeff& x, const Coeff& y) const { return x - y; }
  Coeff neg(const Coeff& x) const { return -x; }
  Coeff mul(const Coeff& x, const Coeff& y) const { return x * y; }
  void fma(Coeff& acc, const Coeff& x, const Coeff& y) const { acc += x * y; }
  std::string name() const { return "Z"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

// Term-count cap for polynomial products. FPSELBERG_MAX_TERMS overrides
// the default.
std::size_t max_terms();
inline constexpr std::size_t kDefaultMaxTerms = 4'000'000;

// Cycle [l_1, ..., l_k]_p: names the coefficient of x_1^{l_1 p - 1} ... x_k^{l_k p - 1}.
class Cycle {
public:
  Cycle(std::initializer_list<std::uint32_t> l) : Cycle(std::vector<std::uint32_t>(l)) {}
  explicit Cycle(std::vector<std::uint32_t> l);

  std::size_t size() const noexcept { return l_.size(); }
  std::uint32_t operator[](std::size_t i) const { return l_.at(i); }
  const std::vector<std::uint32_t>& entries() const noexcept { return l_; }
  Exponents exponents(std::uint32_t p) const;
  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

private:
  std::vector<std::uint32_t> l_;
};

// Sparse multivariate polynomial: exponent vector -> non-zero coefficient.
template <class Ring>
class MultiPoly {
public:
  using Coeff = typename Ring::Coeff;
  using TermMap = std::map<Exponents, Coeff>;

  MultiPoly(Ring ring, std::size_t num_vars) : ring_(std::move(ring)), num_vars_(num_vars) {
    if (num_vars_ == 0) throw ArityError("polynomial needs at least one variable");
  }

  static MultiPoly constant(Ring ring, std::size_t num_vars, Coeff c) {
    MultiPoly r(std::move(ring), num_vars);
    r.add_term(Exponents(num_vars, 0), std::move(c));
    return r;
  }

  static MultiPoly monomial(Ring ring, Exponents e, Coeff c) {
    MultiPoly r(std::move(ring), e.size());
    r.add_term(e, std::move(c));
    return r;
  }

  // x_i, 0-based.
  static MultiPoly variable(Ring ring, std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw ArityError("variable index out of range");
    Exponents e(num_vars, 0);
    e[i] = 1;
    Coeff one = ring.one();
    return monomial(std::move(ring), std::move(e), std::move(one));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(const Exponents& e, const Coeff& c) {
    if (e.size() != num_vars_) throw ArityError("exponent vector has wrong length");
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exponents& e) const {
    if (e.size() != num_vars_) throw ArityError("exponent vector has wrong length");
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  std::uint32_t degree(std::size_t var) const {
    if (var >= num_vars_) throw ArityError("variable index out of range");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r(ring_, num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  MultiPoly scaled(const Coeff& s) const {
    MultiPoly r(ring_, num_vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
  }

  void check_compatible(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_)
      throw ArityError("polynomials have different numbers of variables");
    if (!(ring_ == o.ring_))
      throw ArityError("polynomials over different rings: " + ring_.name() + " vs " +
                       o.ring_.name());
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

private:
  Ring ring_;
  std::size_t num_vars_;
  TermMap terms_;
};

using FpPoly = MultiPoly<FpRing>;
using IntPoly = MultiPoly<IntegerRing>;

namespace detail {

template <class Ring>
MultiPoly<Ring> multiply_dense(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  const std::size_t n = a.num_vars();
  const std::size_t w0 = std::size_t{a.degree(0)} + b.degree(0) + 1;
  const std::size_t w1 = n == 2 ? std::size_t{a.degree(1)} + b.degree(1) + 1 : 1;
  if (w0 * w1 > max_terms())
    throw ResourceError("product box of " + std::to_string(w0 * w1) +
                        " coefficients exceeds the term cap " + std::to_string(max_terms()));

  using Coeff = typename Ring::Coeff;
  const Ring& ring = a.ring();
  auto flatten = [&](const MultiPoly<Ring>& p) {
    std::vector<std::pair<std::size_t, const Coeff*>> out;
    out.reserve(p.size());
    for (const auto& [e, c] : p.terms())
      out.emplace_back(std::size_t{e[0]} * w1 + (n == 2 ? e[1] : 0), &c);
    return out;
  };
  const auto fa = flatten(a);
  const auto fb = flatten(b);

  std::vector<Coeff> dense(w0 * w1, ring.zero());
  for (const auto& [ia, ca] : fa)
    for (const auto& [ib, cb] : fb) ring.fma(dense[ia + ib], *ca, *cb);

  MultiPoly<Ring> r(ring, n);
  Exponents e(n, 0);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (ring.is_zero(dense[i])) continue;
    e[0] = static_cast<std::uint32_t>(i / w1);
    if (n == 2) e[1] = static_cast<std::uint32_t>(i % w1);
    r.add_term(e, dense[i]);
  }
  return r;
}

template <class Ring>
MultiPoly<Ring> multiply_sparse(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  const std::size_t cap = max_terms();
  MultiPoly<Ring> r(a.ring(), a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, a.ring().mul(ca, cb));
    }
    if (r.size() > cap)
      throw ResourceError("product exceeds the term cap " + std::to_string(cap));
  }
  return r;
}

} // namespace detail

template <class Ring>
MultiPoly<Ring> multiply(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly<Ring>(a.ring(), a.num_vars());
  if (a.num_vars() <= 2) return detail::multiply_dense(a, b);
  return detail::multiply_sparse(a, b);
}

template <class Ring>
MultiPoly<Ring> operator*(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  return multiply(a, b);
}

// Repeated squaring; power(a, 0) = 1.
template <class Ring>
MultiPoly<Ring> power(MultiPoly<Ring> base, std::uint64_t e) {
  auto result = MultiPoly<Ring>::constant(base.ring(), base.num_vars(), base.ring().one());
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

// Formal derivative in x_i (0-based). Over F_p the exponent is reduced mod p,
// so terms whose exponent is divisible by p drop out.
template <class Ring>
MultiPoly<Ring> partial_derivative(const MultiPoly<Ring>& P, std::size_t i) {
  if (i >= P.num_vars()) throw ArityError("derivative variable index out of range");
  MultiPoly<Ring> r(P.ring(), P.num_vars());
  for (const auto& [e, c] : P.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    r.add_term(d, P.ring().mul(c, P.ring().from_int(e[i])));
  }
  return r;
}

// Exchange x_i and x_j.
template <class Ring>
MultiPoly<Ring> swap_variables(const MultiPoly<Ring>& P, std::size_t i, std::size_t j) {
  if (i >= P.num_vars() || j >= P.num_vars()) throw ArityError("variable index out of range");
  MultiPoly<Ring> r(P.ring(), P.num_vars());
  for (const auto& [e, c] : P.terms()) {
    Exponents s = e;
    std::swap(s[i], s[j]);
    r.add_term(s, c);
  }
  return r;
}

// Coefficient of x_1^{l_1 p - 1} ... x_k^{l_k p - 1}, in whatever ring P lives in.
template <class Ring>
typename Ring::Coeff cycle_coefficient(const MultiPoly<Ring>& P, const Cycle& cycle,
                                       std::uint32_t p) {
  if (cycle.size() != P.num_vars())
    throw ArityError("cycle length " + std::to_string(cycle.size()) + " does not match " +
                     std::to_string(P.num_vars()) + " variables");
  return P.coefficient(cycle.exponents(p));
}

// The F_p-integral of P over the cycle.
inline Fp fp_integral(const FpPoly& P, const Cycle& cycle) {
  return Fp{cycle_coefficient(P, cycle, P.ring().p)};
}

// Coefficient-wise projection Z[x] -> F_p[x].
FpPoly reduce(const IntPoly& P, std::uint32_t p);

} // namespace fpselberg
