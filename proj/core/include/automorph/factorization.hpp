#pragma once

#include "automorph/integer.hpp"

#include <cstdint>
#include <vector>

namespace automorph {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Canonical factorization of a radix: primes strictly ascending, product of
/// prime^exponent equal to base. The ascending order fixes the coordinate
/// order of every selector tuple downstream, so class labels are stable
/// across runs.
struct Factorization {
  std::uint64_t base = 0;
  std::vector<PrimePower> factors;

  /// m — the number of distinct primes.
  std::size_t prime_count() const { return factors.size(); }
};

// Bases are user-supplied radixes, realistically small; the ceiling keeps
// trial division instantaneous.
inline constexpr std::uint64_t kDefaultBaseCeiling = std::uint64_t{1} << 32;

/// Factor by trial division (2, then odd candidates up to sqrt).
/// base < 2 is a domain error; base > ceiling throws UnsupportedBaseError.
Factorization factor_base(std::uint64_t base, std::uint64_t ceiling = kDefaultBaseCeiling);

/// The moduli p_i^(n*e_i) in factor order; their product is base^n.
std::vector<Integer> prime_power_moduli(const Factorization& f, unsigned n);

}  // namespace automorph
