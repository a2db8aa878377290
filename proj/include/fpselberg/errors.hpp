#pragma once

#include <stdexcept>
#include <string>

namespace fpselberg {

// Precondition of a formula or operation does not hold.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Table lookup or index outside the supported range.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Polynomial size guard or dimension cap tripped.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands with different arity or coefficient ring.
class ArityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A denominator factorial fell outside [0, p-1], or the classifier reached
// a branch that the case analysis rules out. Never expected to fire.
class GuardError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace fpselberg
