#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace fpselberg {

using BigInt = boost::multiprecision::cpp_int;

// Exact n! for the Morris and integer-mode checks.
BigInt big_factorial(std::uint64_t n);

// Exact binomial coefficient; zero when m > n.
BigInt big_binomial(std::uint64_t n, std::uint64_t m);

// Non-negative residue of x modulo p.
std::uint32_t reduce_mod(const BigInt& x, std::uint32_t p);

} // namespace fpselberg
