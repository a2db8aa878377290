#include "fpselberg/multipoly.hpp"

#include <cstdlib>
#include <sstream>

namespace fpselberg {

std::size_t max_terms() {
  if (const char* env = std::getenv("FPSELBERG_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxTerms;
}

Cycle::Cycle(std::vector<std::uint32_t> l) : l_(std::move(l)) {
  if (l_.empty()) throw DomainError("cycle must have at least one entry");
  for (auto v : l_)
    if (v == 0) throw DomainError("cycle entries must be positive");
}

Exponents Cycle::exponents(std::uint32_t p) const {
  Exponents e(l_.size());
  for (std::size_t i = 0; i < l_.size(); ++i) e[i] = l_[i] * p - 1;
  return e;
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < l_.size(); ++i) os << (i ? "," : "") << l_[i];
  os << ']';
  return os.str();
}

FpPoly reduce(const IntPoly& P, std::uint32_t p) {
  FpPoly r(FpRing{p}, P.num_vars());
  for (const auto& [e, c] : P.terms()) r.add_term(e, reduce_mod(c, p));
  return r;
}

} // namespace fpselberg
