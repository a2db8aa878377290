#include "fpselberg/factorial_ratio.hpp"

#include <sstream>

namespace fpselberg {

Fp FactorialRatio::evaluate(const FpContext& ctx) const {
  Fp r = sign < 0 ? ctx.neg(ctx.one()) : ctx.one();
  for (auto d : denominator) r = ctx.mul(r, ctx.inv_factorial(d));
  for (auto n : numerator) r = ctx.mul(r, ctx.factorial(n));
  return r;
}

std::string FactorialRatio::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << '-';
  auto list = [&os](const std::vector<std::int64_t>& args) {
    if (args.empty()) {
      os << '1';
      return;
    }
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "*" : "") << '(' << args[i] << ")!";
  };
  list(numerator);
  if (!denominator.empty()) {
    os << "/(";
    list(denominator);
    os << ')';
  }
  return os.str();
}

} // namespace fpselberg
