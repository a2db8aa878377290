#pragma once

#include "fpselberg/closed2d.hpp"
#include "fpselberg/modp.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fpselberg {

enum class Method { Bruteforce, Direct, Closed };

std::string_view to_string(Method method);
// Throws DomainError on an unknown name.
Method parse_method(std::string_view name);

enum class OutputFormat { Json, Csv, Text };
std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view name);

struct SweepOptions {
  std::vector<std::uint32_t> primes;
  std::uint32_t cycle_bound = 4;
  Method method = Method::Closed;
  unsigned jobs = 1;
};

// One (p, a, b, c, l1, l2) with l1 <= l2.
struct SweepRow {
  std::uint32_t p, a, b, c, l1, l2;
  CaseTag tag;
  Fp value;
  bool in_r1, in_r2, in_r3;
};

inline constexpr std::string_view kSweepCsvHeader = "p,a,b,c,l1,l2,branch,value,in_R1,in_R2,in_R3";

// Validates the options (non-empty prime list, odd primes, cycle_bound >= 1).
void validate(const SweepOptions& options);

// sum_p (p-1)^3 * bound(bound+1)/2
std::size_t expected_row_count(const SweepOptions& options);

// Rows in lexicographic (p, a, b, c, l1, l2) order, independent of jobs.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows, OutputFormat format);

} // namespace fpselberg
