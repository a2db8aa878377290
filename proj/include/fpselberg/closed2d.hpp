#pragma once

#include "fpselberg/factorial_ratio.hpp"
#include "fpselberg/modp.hpp"
#include "fpselberg/selberg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace fpselberg {

enum class CycleClass { C11, C22, C12, C13, C23, Other };

enum class Branch {
  // Degree infeasibility: the cycle monomial cannot occur in Phi ([1,1] and [2,2]).
  NotApplicableZero,
  C11_i,
  C11_ii,
  C11_iii_zero,
  C22_i,
  C22_ii,
  C12_delta_neg_zero,
  C12_delta0_zero,
  C12_delta0_formula,
  C12_i,
  C12_ii,
  C12_iii_zero,
  C12_iv,
  C12_v_zero,
  C12_vi_zero,
  C13_zero,
  C13_formula,
  C23_zero,
  Other_zero,
};

inline constexpr std::array kAllBranches = {
    Branch::NotApplicableZero, Branch::C11_i,          Branch::C11_ii,
    Branch::C11_iii_zero,      Branch::C22_i,          Branch::C22_ii,
    Branch::C12_delta_neg_zero, Branch::C12_delta0_zero, Branch::C12_delta0_formula,
    Branch::C12_i,             Branch::C12_ii,         Branch::C12_iii_zero,
    Branch::C12_iv,            Branch::C12_v_zero,     Branch::C12_vi_zero,
    Branch::C13_zero,          Branch::C13_formula,    Branch::C23_zero,
    Branch::Other_zero,
};

struct CaseTag {
  CycleClass cycle_class;
  Branch branch;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string_view to_string(CycleClass cls);
std::string_view to_string(Branch branch);
// The inequalities that select the branch, in words.
std::string_view describe(Branch branch);

// The branch value is identically zero in F_p.
bool is_zero_branch(Branch branch);
// The branch asserts S = 0 over Z (monomial unreachable), not only in F_p.
bool asserts_integer_zero(Branch branch);

// (min, max): the integral is symmetric in l1, l2.
std::pair<std::uint32_t, std::uint32_t> canonical_cycle(std::uint32_t l1, std::uint32_t l2);

CycleClass cycle_class(std::uint32_t l1, std::uint32_t l2);

// Total over 0 < a, b, c < p and l1, l2 >= 1. GuardError marks a branch the
// case analysis rules out.
CaseTag classify(const SelbergParams& params, std::uint32_t l1, std::uint32_t l2);

struct ClosedForm {
  CaseTag tag;
  // Empty on zero branches.
  std::optional<FactorialRatio> formula;
};

ClosedForm closed_form(const SelbergParams& params, std::uint32_t l1, std::uint32_t l2);
Fp eval_closed(const FpContext& ctx, const SelbergParams& params, std::uint32_t l1,
               std::uint32_t l2);

// The three expressions available for [1,2] at delta = 0, a + b >= p - 1.
enum class Delta0Form {
  Canonical, // (-1)^{b+1} a! b!/(a+b-p+1)!
  BSide,     // needs b + c >= p
  ASide,     // needs a + c >= p
};
FactorialRatio delta0_formula(const SelbergParams& params, Delta0Form form);

enum class ConditionSet { None, R1, R2, R3 };
std::string_view to_string(ConditionSet set);

// R1: 2c<p, a+c<=p-1, b+c>=p, a+b+2c>=2p-1.  R2: 2c<p, a+b+c>=2p-1.
// R3: 2c>p, a+b+2c>=3p-1.  Mutually exclusive.
ConditionSet condition_set(const SelbergParams& params);
bool in_condition_set(const SelbergParams& params, ConditionSet set);

// Closed form of the primary integral named by the condition set:
// S(1,1) for R1, S(2,2) for R2 and R3.
FactorialRatio relation_anchor_formula(const SelbergParams& params, ConditionSet set);

struct RelationReport {
  ConditionSet condition_set = ConditionSet::None;
  // Brute-force values: anchor integral, then the two mirrored partners
  // ([1,1],[1,2],[2,1] for R1; [2,2],[1,2],[2,1] for R2; [2,2],[1,3],[3,1] for R3).
  std::array<Fp, 3> values{};
  // -1/2 * values[0] == values[1] == values[2]
  bool relation_holds = false;
  // values[0] matches the anchor closed form
  bool anchor_formula_holds = false;
  // The non-zero pairs l1 <= l2 are exactly the two named by the condition set.
  bool nonzero_set_holds = false;
  // Outside R1/R2/R3: at most one non-zero pair l1 <= l2 <= cycle_bound.
  bool uniqueness_holds = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nonzero_pairs;

  bool ok() const noexcept {
    return condition_set == ConditionSet::None
               ? uniqueness_holds
               : relation_holds && anchor_formula_holds && nonzero_set_holds;
  }
};

RelationReport relations_check(const FpContext& ctx, const SelbergParams& params,
                               std::uint32_t cycle_bound = 4);

// Under R3, expands (x1-x2)^{2c} x^a(1-x)^b (coefficients alpha) and
// (x1-x2)^{2c-p} x^a(1-x)^b (coefficients beta) and checks
//   alpha[3p-1,p-1] = beta[2p-1,p-1]
//   alpha[2p-1,2p-1] = beta[p-1,2p-1] - beta[2p-1,p-1]
//   alpha[p-1,3p-1] = -beta[p-1,2p-1]
//   beta[p-1,2p-1] = -beta[2p-1,p-1]
//   -1/2 alpha[2p-1,2p-1] = alpha[p-1,3p-1] = alpha[3p-1,p-1].
// DomainError outside R3.
bool skew_symmetry_check(const FpContext& ctx, const SelbergParams& params);

} // namespace fpselberg
