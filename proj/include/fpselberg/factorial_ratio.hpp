#pragma once

#include "fpselberg/modp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fpselberg {

// sign * prod(numerator[i]!) / prod(denominator[j]!), the shape shared by every
// closed-form evaluation in this library. Numerator arguments may reach 4p
// (those factorials vanish in F_p); denominator arguments must stay in [0, p-1].
struct FactorialRatio {
  int sign = 1;
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;

  Fp evaluate(const FpContext& ctx) const;
  // e.g. "-(6)!*(3)!/((2)!*(0)!)"
  std::string to_string() const;
};

} // namespace fpselberg
