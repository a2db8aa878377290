#include "fpselberg/closed2d.hpp"

#include "fpselberg/errors.hpp"

#include <algorithm>
#include <string>

namespace fpselberg {

namespace {

struct Ints {
  std::int64_t p, a, b, c;
  explicit Ints(const SelbergParams& s) : p(s.p()), a(s.a()), b(s.b()), c(s.c()) {}
};

[[noreturn]] void unreachable(const SelbergParams& s, std::uint32_t l1, std::uint32_t l2) {
  throw GuardError("classifier reached an excluded case at p=" + std::to_string(s.p()) +
                   " a=" + std::to_string(s.a()) + " b=" + std::to_string(s.b()) +
                   " c=" + std::to_string(s.c()) + " cycle=[" + std::to_string(l1) + "," +
                   std::to_string(l2) + "]");
}

Branch classify_11(const Ints& v) {
  const auto [p, a, b, c] = v;
  if (p <= a + c || a + b + c <= p - 2) return Branch::NotApplicableZero;
  if (b + c <= p - 1) return Branch::C11_i;
  if (a + b + 2 * c >= 2 * p - 1) return Branch::C11_ii;
  return Branch::C11_iii_zero;
}

Branch classify_22(const Ints& v) {
  const auto [p, a, b, c] = v;
  if (a + b + c <= 2 * p - 2) return Branch::NotApplicableZero;
  if (a + b + 2 * c <= 3 * p - 2) return Branch::C22_i;
  return Branch::C22_ii;
}

std::optional<Branch> classify_12(const Ints& v) {
  const auto [p, a, b, c] = v;
  const std::int64_t delta = a + b + 2 * c + 1 - 2 * p;
  if (delta < 0) return Branch::C12_delta_neg_zero;
  if (delta == 0) return a + b < p - 1 ? Branch::C12_delta0_zero : Branch::C12_delta0_formula;
  // p is odd, so 2c != p.
  if (2 * c < p) {
    if (a + c <= p - 1 && b + c >= p) return Branch::C12_i;
    if (a + c >= p && b + c < p) return Branch::C12_ii;
    if (a + c >= p && b + c >= p)
      return a + b + c < 2 * p - 1 ? Branch::C12_iii_zero : Branch::C12_iv;
    return std::nullopt; // a+c, b+c <= p-1 forces delta <= -1
  }
  if (a + c >= p) return Branch::C12_v_zero;
  if (b + c >= p) return Branch::C12_vi_zero;
  return std::nullopt; // same: delta <= -1
}

Branch classify_13(const Ints& v) {
  const auto [p, a, b, c] = v;
  return a + b + 2 * c < 3 * p - 1 ? Branch::C13_zero : Branch::C13_formula;
}

FactorialRatio anchor_formula(const Ints& v, Branch branch) {
  const auto [p, a, b, c] = v;
  switch (branch) {
  case Branch::C11_i:
    return {1, {2 * c, a, a + c, b, b + c}, {c, a + b + c - p + 1, a + b + 2 * c - p + 1}};
  case Branch::C11_ii:
    return {1, {2 * c, a, a + c, b, b + c - p}, {c, a + b + c - p + 1, a + b + 2 * c - 2 * p + 1}};
  case Branch::C22_i:
    return {-1,
            {2 * c, a, a + c - p, b, b + c - p},
            {c, a + b + c - 2 * p + 1, a + b + 2 * c - 2 * p + 1}};
  case Branch::C22_ii:
    return {-1,
            {2 * c - p, a, a + c - p, b, b + c - p},
            {c, a + b + c - 2 * p + 1, a + b + 2 * c - 3 * p + 1}};
  case Branch::C12_delta0_formula:
    return {(b + 1) % 2 == 0 ? 1 : -1, {a, b}, {a + b - p + 1}};
  case Branch::C12_i:
    return {-1,
            {2 * c - 1, a, a + c, b, b + c - p},
            {c - 1, a + b + c - p + 1, a + b + 2 * c - 2 * p + 1}};
  case Branch::C12_ii:
    // Mirror of C12_i under a <-> b, with opposite sign.
    return {1,
            {2 * c - 1, a, a + c - p, b, b + c},
            {c - 1, a + b + c - p + 1, a + b + 2 * c - 2 * p + 1}};
  case Branch::C12_iv:
    return {1,
            {2 * c - 1, a, a + c - p, b, b + c - p},
            {c - 1, a + b + c - 2 * p + 1, a + b + 2 * c - 2 * p + 1}};
  case Branch::C13_formula:
    return {1,
            {2 * c - 1 - p, a, a + c - p, b, b + c - p},
            {c - 1, a + b + c - 2 * p + 1, a + b + 2 * c - 3 * p + 1}};
  default:
    throw GuardError("branch " + std::string(to_string(branch)) + " has no closed form");
  }
}

FpPoly skew_polynomial(const SelbergParams& s) {
  const FpRing ring{s.p()};
  const auto one = FpPoly::constant(ring, 2, 1);
  const auto x1 = FpPoly::variable(ring, 2, 0);
  const auto x2 = FpPoly::variable(ring, 2, 1);
  auto poly = power(x1 - x2, 2 * std::uint64_t{s.c()} - s.p());
  poly = poly * FpPoly::monomial(ring, {s.a(), s.a()}, 1);
  poly = poly * power(one - x1, s.b()) * power(one - x2, s.b());
  return poly;
}

} // namespace

std::string_view to_string(CycleClass cls) {
  switch (cls) {
  case CycleClass::C11: return "C11";
  case CycleClass::C22: return "C22";
  case CycleClass::C12: return "C12";
  case CycleClass::C13: return "C13";
  case CycleClass::C23: return "C23";
  case CycleClass::Other: return "OTHER";
  }
  return "?";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
  case Branch::NotApplicableZero: return "NOT_APPLICABLE_zero";
  case Branch::C11_i: return "C11_i";
  case Branch::C11_ii: return "C11_ii";
  case Branch::C11_iii_zero: return "C11_iii_zero";
  case Branch::C22_i: return "C22_i";
  case Branch::C22_ii: return "C22_ii";
  case Branch::C12_delta_neg_zero: return "C12_delta_neg_zero";
  case Branch::C12_delta0_zero: return "C12_delta0_zero";
  case Branch::C12_delta0_formula: return "C12_delta0_formula";
  case Branch::C12_i: return "C12_i";
  case Branch::C12_ii: return "C12_ii";
  case Branch::C12_iii_zero: return "C12_iii_zero";
  case Branch::C12_iv: return "C12_iv";
  case Branch::C12_v_zero: return "C12_v_zero";
  case Branch::C12_vi_zero: return "C12_vi_zero";
  case Branch::C13_zero: return "C13_zero";
  case Branch::C13_formula: return "C13_formula";
  case Branch::C23_zero: return "C23_zero";
  case Branch::Other_zero: return "OTHER_zero";
  }
  return "?";
}

std::string_view describe(Branch branch) {
  switch (branch) {
  case Branch::NotApplicableZero:
    return "cycle monomial absent from Phi ([1,1]: a+c>=p or a+b+c<=p-2; [2,2]: a+b+c<=2p-2)";
  case Branch::C11_i: return "a+c<=p-1, a+b+c>=p-1, b+c<=p-1";
  case Branch::C11_ii: return "a+c<=p-1, a+b+c>=p-1, b+c>=p, a+b+2c>=2p-1";
  case Branch::C11_iii_zero: return "a+c<=p-1, a+b+c>=p-1, b+c>=p, a+b+2c<=2p-2";
  case Branch::C22_i: return "a+b+c>=2p-1, a+b+2c<=3p-2";
  case Branch::C22_ii: return "a+b+c>=2p-1, a+b+2c>=3p-1 (forces 2c>p)";
  case Branch::C12_delta_neg_zero: return "delta<0: x2^{2p-1} unreachable";
  case Branch::C12_delta0_zero: return "delta=0, a+b<p-1";
  case Branch::C12_delta0_formula: return "delta=0, a+b>=p-1";
  case Branch::C12_i: return "delta>0, 2c<p, a+c<=p-1, b+c>=p";
  case Branch::C12_ii: return "delta>0, 2c<p, a+c>=p, b+c<p";
  case Branch::C12_iii_zero: return "delta>0, 2c<p, a+c>=p, b+c>=p, a+b+c<2p-1";
  case Branch::C12_iv: return "delta>0, 2c<p, a+b+c>=2p-1";
  case Branch::C12_v_zero: return "delta>0, 2c>p, a+c>=p";
  case Branch::C12_vi_zero: return "delta>0, 2c>p, a+c<p, b+c>=p";
  case Branch::C13_zero: return "a+b+2c<3p-1";
  case Branch::C13_formula: return "a+b+2c>=3p-1";
  case Branch::C23_zero: return "[2,3] always vanishes";
  case Branch::Other_zero: return "cycle outside {[1,1],[2,2],[1,2],[1,3]} always vanishes";
  }
  return "?";
}

bool is_zero_branch(Branch branch) {
  switch (branch) {
  case Branch::C11_i:
  case Branch::C11_ii:
  case Branch::C22_i:
  case Branch::C22_ii:
  case Branch::C12_delta0_formula:
  case Branch::C12_i:
  case Branch::C12_ii:
  case Branch::C12_iv:
  case Branch::C13_formula:
    return false;
  default:
    return true;
  }
}

bool asserts_integer_zero(Branch branch) {
  switch (branch) {
  case Branch::NotApplicableZero:
  case Branch::C12_delta_neg_zero:
  case Branch::C12_delta0_zero:
  case Branch::C13_zero:
  case Branch::Other_zero:
    return true;
  default:
    return false;
  }
}

std::pair<std::uint32_t, std::uint32_t> canonical_cycle(std::uint32_t l1, std::uint32_t l2) {
  return {std::min(l1, l2), std::max(l1, l2)};
}

CycleClass cycle_class(std::uint32_t l1, std::uint32_t l2) {
  const auto [lo, hi] = canonical_cycle(l1, l2);
  if (lo == 1 && hi == 1) return CycleClass::C11;
  if (lo == 2 && hi == 2) return CycleClass::C22;
  if (lo == 1 && hi == 2) return CycleClass::C12;
  if (lo == 1 && hi == 3) return CycleClass::C13;
  if (lo == 2 && hi == 3) return CycleClass::C23;
  return CycleClass::Other;
}

CaseTag classify(const SelbergParams& params, std::uint32_t l1, std::uint32_t l2) {
  if (l1 == 0 || l2 == 0) throw DomainError("cycle entries must be positive");
  const Ints v(params);
  const CycleClass cls = cycle_class(l1, l2);
  switch (cls) {
  case CycleClass::C11: return {cls, classify_11(v)};
  case CycleClass::C22: return {cls, classify_22(v)};
  case CycleClass::C12:
    if (auto branch = classify_12(v)) return {cls, *branch};
    unreachable(params, l1, l2);
  case CycleClass::C13: return {cls, classify_13(v)};
  case CycleClass::C23: return {cls, Branch::C23_zero};
  case CycleClass::Other: return {cls, Branch::Other_zero};
  }
  unreachable(params, l1, l2);
}

ClosedForm closed_form(const SelbergParams& params, std::uint32_t l1, std::uint32_t l2) {
  const CaseTag tag = classify(params, l1, l2);
  if (is_zero_branch(tag.branch)) return {tag, std::nullopt};
  return {tag, anchor_formula(Ints(params), tag.branch)};
}

Fp eval_closed(const FpContext& ctx, const SelbergParams& params, std::uint32_t l1,
               std::uint32_t l2) {
  if (params.p() != ctx.p()) throw ArityError("parameters and context use different primes");
  const ClosedForm form = closed_form(params, l1, l2);
  return form.formula ? form.formula->evaluate(ctx) : ctx.zero();
}

FactorialRatio delta0_formula(const SelbergParams& params, Delta0Form form) {
  const Ints v(params);
  const auto [p, a, b, c] = v;
  if (params.delta() != 0 || a + b < p - 1)
    throw DomainError("delta-boundary forms need delta = 0 and a+b >= p-1");
  switch (form) {
  case Delta0Form::Canonical:
    return anchor_formula(v, Branch::C12_delta0_formula);
  case Delta0Form::BSide:
    if (b + c < p) throw DomainError("b-side delta-boundary form needs b+c >= p");
    return anchor_formula(v, Branch::C12_i);
  case Delta0Form::ASide:
    if (a + c < p) throw DomainError("a-side delta-boundary form needs a+c >= p");
    return anchor_formula(v, Branch::C12_ii);
  }
  throw GuardError("unknown delta-boundary form");
}

std::string_view to_string(ConditionSet set) {
  switch (set) {
  case ConditionSet::None: return "none";
  case ConditionSet::R1: return "R1";
  case ConditionSet::R2: return "R2";
  case ConditionSet::R3: return "R3";
  }
  return "?";
}

ConditionSet condition_set(const SelbergParams& params) {
  const auto [p, a, b, c] = Ints(params);
  if (2 * c < p && a + c <= p - 1 && b + c >= p && a + b + 2 * c >= 2 * p - 1)
    return ConditionSet::R1;
  if (2 * c < p && a + b + c >= 2 * p - 1) return ConditionSet::R2;
  if (2 * c > p && a + b + 2 * c >= 3 * p - 1) return ConditionSet::R3;
  return ConditionSet::None;
}

bool in_condition_set(const SelbergParams& params, ConditionSet set) {
  return set != ConditionSet::None && condition_set(params) == set;
}

FactorialRatio relation_anchor_formula(const SelbergParams& params, ConditionSet set) {
  const Ints v(params);
  switch (set) {
  case ConditionSet::R1: return anchor_formula(v, Branch::C11_ii);
  case ConditionSet::R2: return anchor_formula(v, Branch::C22_i);
  case ConditionSet::R3: return anchor_formula(v, Branch::C22_ii);
  case ConditionSet::None: break;
  }
  throw DomainError("no anchor formula outside R1/R2/R3");
}

RelationReport relations_check(const FpContext& ctx, const SelbergParams& params,
                               std::uint32_t cycle_bound) {
  if (params.p() != ctx.p()) throw ArityError("parameters and context use different primes");
  cycle_bound = std::max<std::uint32_t>(cycle_bound, 3);
  const FpPoly phi = master_polynomial(MasterPolySpec(2, params), ctx.p());
  auto integral = [&](std::uint32_t l1, std::uint32_t l2) {
    return fp_integral(phi, Cycle{l1, l2});
  };

  RelationReport report;
  report.condition_set = condition_set(params);
  for (std::uint32_t l1 = 1; l1 <= cycle_bound; ++l1)
    for (std::uint32_t l2 = l1; l2 <= cycle_bound; ++l2)
      if (integral(l1, l2).v != 0) report.nonzero_pairs.emplace_back(l1, l2);
  report.uniqueness_holds = report.nonzero_pairs.size() <= 1;

  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  std::array<Pair, 3> cycles{};
  switch (report.condition_set) {
  case ConditionSet::None: return report;
  case ConditionSet::R1: cycles = {Pair{1, 1}, Pair{1, 2}, Pair{2, 1}}; break;
  case ConditionSet::R2: cycles = {Pair{2, 2}, Pair{1, 2}, Pair{2, 1}}; break;
  case ConditionSet::R3: cycles = {Pair{2, 2}, Pair{1, 3}, Pair{3, 1}}; break;
  }
  for (std::size_t i = 0; i < 3; ++i)
    report.values[i] = integral(cycles[i].first, cycles[i].second);

  const Fp half = ctx.inverse(ctx.from_int(2));
  const Fp lhs = ctx.neg(ctx.mul(half, report.values[0]));
  report.relation_holds = lhs == report.values[1] && report.values[1] == report.values[2];
  report.anchor_formula_holds =
      relation_anchor_formula(params, report.condition_set).evaluate(ctx) == report.values[0];
  std::vector<Pair> expected{cycles[0], canonical_cycle(cycles[1].first, cycles[1].second)};
  std::sort(expected.begin(), expected.end());
  report.nonzero_set_holds = report.nonzero_pairs == expected;
  return report;
}

bool skew_symmetry_check(const FpContext& ctx, const SelbergParams& params) {
  if (params.p() != ctx.p()) throw ArityError("parameters and context use different primes");
  if (!in_condition_set(params, ConditionSet::R3))
    throw DomainError("skew-symmetry check needs 2c > p and a+b+2c >= 3p-1");
  const std::uint32_t p = ctx.p();
  const FpPoly alpha_poly = master_polynomial(MasterPolySpec(2, params), p);
  const FpPoly beta_poly = skew_polynomial(params);
  auto alpha = [&](std::uint32_t l1, std::uint32_t l2) { return fp_integral(alpha_poly, {l1, l2}); };
  auto beta = [&](std::uint32_t l1, std::uint32_t l2) { return fp_integral(beta_poly, {l1, l2}); };

  const Fp a31 = alpha(3, 1), a22 = alpha(2, 2), a13 = alpha(1, 3);
  const Fp b21 = beta(2, 1), b12 = beta(1, 2);
  const Fp half = ctx.inverse(ctx.from_int(2));

  const bool ok = a31 == b21 && a22 == ctx.sub(b12, b21) && a13 == ctx.neg(b12) &&
                  b12 == ctx.neg(b21) && ctx.neg(ctx.mul(half, a22)) == a13 && a13 == a31;
  return ok;
}

} // namespace fpselberg
