#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace automorph {

// Arbitrary-precision integer. Moduli like B^n outgrow machine words almost
// immediately (base 10 needs 10 digits for the width-10 table alone), so the
// whole library works over cpp_int.
using Integer = boost::multiprecision::cpp_int;

/// Exact base^exp by binary exponentiation (no modulus).
Integer int_pow(Integer base, std::uint64_t exp);

/// Canonical representative of x in [0, modulus); accepts negative x.
Integer mod_reduce(const Integer& x, const Integer& modulus);

}  // namespace automorph
