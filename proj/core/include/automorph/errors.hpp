#pragma once

#include "automorph/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace automorph {

/// mod_inverse on a non-unit. Carries the offending gcd.
class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError(const Integer& value, const Integer& modulus, Integer gcd)
      : std::domain_error("value " + value.str() + " is not invertible modulo " +
                          modulus.str() + " (gcd = " + gcd.str() + ")"),
        gcd_(std::move(gcd)) {}

  const Integer& gcd() const { return gcd_; }

 private:
  Integer gcd_;
};

/// CRT over moduli that share a factor. Names the offending pair.
class NonCoprimeModuliError : public std::domain_error {
 public:
  NonCoprimeModuliError(std::size_t index_a, std::size_t index_b, Integer modulus_a,
                        Integer modulus_b, Integer gcd)
      : std::domain_error("moduli at positions " + std::to_string(index_a) + " and " +
                          std::to_string(index_b) + " are not coprime: gcd(" +
                          modulus_a.str() + ", " + modulus_b.str() + ") = " + gcd.str()),
        index_a_(index_a),
        index_b_(index_b),
        modulus_a_(std::move(modulus_a)),
        modulus_b_(std::move(modulus_b)),
        gcd_(std::move(gcd)) {}

  std::size_t index_a() const { return index_a_; }
  std::size_t index_b() const { return index_b_; }
  const Integer& modulus_a() const { return modulus_a_; }
  const Integer& modulus_b() const { return modulus_b_; }
  const Integer& gcd() const { return gcd_; }

 private:
  std::size_t index_a_, index_b_;
  Integer modulus_a_, modulus_b_, gcd_;
};

/// Base above the factorization ceiling.
class UnsupportedBaseError : public std::domain_error {
 public:
  UnsupportedBaseError(std::uint64_t base, std::uint64_t ceiling)
      : std::domain_error("base " + std::to_string(base) + " exceeds the supported ceiling " +
                          std::to_string(ceiling)),
        base_(base),
        ceiling_(ceiling) {}

  std::uint64_t base() const { return base_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  std::uint64_t base_, ceiling_;
};

/// Exhaustive-scan oracle asked to sweep more residues than its ceiling allows.
class OracleTooLargeError : public std::domain_error {
 public:
  OracleTooLargeError(const Integer& modulus, std::uint64_t ceiling)
      : std::domain_error("oracle modulus " + modulus.str() + " exceeds the scan ceiling " +
                          std::to_string(ceiling)) {}
};

// A proven theorem failed to hold at runtime. Always an implementation bug,
// never a data condition.
class InvariantViolationError : public std::logic_error {
 public:
  explicit InvariantViolationError(const std::string& what) : std::logic_error(what) {}
};

/// Exact-width count landed outside the theoretical bounds.
class BoundViolationError : public InvariantViolationError {
 public:
  explicit BoundViolationError(const std::string& what) : InvariantViolationError(what) {}
};

}  // namespace automorph
