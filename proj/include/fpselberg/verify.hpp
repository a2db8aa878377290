#pragma once

#include "fpselberg/sweep.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpselberg {

enum class Suite {
  Golden,      // published example values at p = 7
  Foundations, // Wilson, factorial cancellation, Lucas, beta integral
  OracleEquiv, // closed = direct = brute force on every cycle l1 <= l2 <= bound
  Vanishing,   // zero branches vanish; non-vanishing claims hold
  Recurrences, // S1/S2 moment recurrences and the a-/b-step corollaries
  Relations,   // R1/R2/R3 relations, uniqueness outside, skew symmetry under R3
  Morris,      // constant-term identity, symmetric form, [1,1]/[2,2] bridge
  Stokes,      // integrals of partial derivatives vanish
  Nd,          // n-dimensional product formula
};

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SweepConfig {
  std::vector<std::uint32_t> primes{3, 5, 7, 11, 13};
  std::uint32_t cycle_bound = 4;
  std::vector<Method> methods{Method::Bruteforce, Method::Direct, Method::Closed};
  std::vector<Suite> suites;
  bool integer_mode = false;
  OutputFormat output_format = OutputFormat::Text;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
};

// Throws DomainError naming the violated constraint.
void validate(const SweepConfig& config);

struct Counterexample {
  std::string suite;
  std::uint32_t p = 0;
  std::int64_t a = 0, b = 0, c = 0;
  std::uint32_t l1 = 0, l2 = 0;
  std::string branch;
  std::string expected;
  std::string got;
  std::string detail;
};

struct SuiteResult {
  Suite suite;
  std::uint64_t checked = 0, passed = 0, failed = 0, skipped = 0;
  double seconds = 0;
};

// Published example value next to the recomputed one.
struct GoldenRecord {
  std::uint32_t p, a, b, c, l1, l2;
  std::uint32_t oracle;      // frozen brute-force value
  std::uint32_t bruteforce;  // recomputed now
  std::uint32_t closed;      // recomputed now
  std::uint32_t paper_value; // value given in the reference example
  bool paper_discrepancy;    // paper_value != oracle
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  std::vector<Counterexample> counterexamples;
  std::vector<GoldenRecord> golden;
  double total_seconds = 0;

  std::uint64_t total_failed() const;
  bool ok() const { return total_failed() == 0; }
};

// Frozen published examples at p = 7.
const std::vector<GoldenRecord>& golden_examples();

VerificationReport run_verification(const SweepConfig& config);

void write_report(std::ostream& os, const VerificationReport& report, OutputFormat format);

} // namespace fpselberg
