#pragma once

// Arbitrary-precision modular arithmetic: extended gcd, modular inverse,
// modular exponentiation, and CRT combination. Everything here is a pure
// function; concurrent calls never interfere.

#include "automorph/integer.hpp"

#include <vector>

namespace automorph {

/// A residue held in canonical form: 0 <= value < modulus, modulus >= 2.
/// The constructor reduces, so unreduced (or negative) inputs are accepted.
class Residue {
 public:
  Residue(const Integer& value, Integer modulus);

  const Integer& value() const { return value_; }
  const Integer& modulus() const { return modulus_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  Integer value_;
  Integer modulus_;
};

/// One row `x ≡ residue (mod modulus)` of a simultaneous system.
struct Congruence {
  Integer residue;
  Integer modulus;
};

/// Simultaneous congruences with pairwise coprime moduli >= 2, each residue
/// reduced. crt_combine validates both invariants on entry.
struct CongruenceSystem {
  std::vector<Congruence> entries;
};

struct ExtGcdResult {
  Integer g;  // gcd(a, b) >= 0
  Integer u;  // u*a + v*b = g
  Integer v;
};

/// Extended Euclid. Rejects (0, 0).
ExtGcdResult ext_gcd(const Integer& a, const Integer& b);

/// base^exponent mod modulus in O(log exponent) multiplications.
/// exponent must be nonnegative, modulus >= 2.
Residue mod_pow(const Integer& base, const Integer& exponent, const Integer& modulus);

/// The unique w in [0, modulus) with a*w ≡ 1. Throws NotInvertibleError
/// (carrying the gcd) when gcd(a, modulus) != 1.
Residue mod_inverse(const Integer& a, const Integer& modulus);

/// The unique x in [0, Π moduli) satisfying every entry. Entries are folded
/// pairwise left to right via Bézout coefficients, reducing after each fold.
Residue crt_combine(const CongruenceSystem& system);

}  // namespace automorph
