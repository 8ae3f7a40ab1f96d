#include "automorph/modular.hpp"

#include "automorph/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <utility>

namespace automorph {

Integer int_pow(Integer base, std::uint64_t exp) {
  Integer result = 1;
  while (exp != 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

Integer mod_reduce(const Integer& x, const Integer& modulus) {
  Integer r = x % modulus;
  if (r < 0) r += modulus;
  return r;
}

Residue::Residue(const Integer& value, Integer modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2) {
    throw std::domain_error("residue modulus must be >= 2, got " + modulus_.str());
  }
  value_ = mod_reduce(value, modulus_);
}

ExtGcdResult ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) {
    throw std::domain_error("ext_gcd(0, 0) is undefined");
  }
  Integer old_r = a, r = b;
  Integer old_u = 1, u = 0;
  Integer old_v = 0, v = 1;
  while (r != 0) {
    Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
    old_v -= q * v;
    std::swap(old_v, v);
  }
  if (old_r < 0) {  // keep g >= 0, preserving u*a + v*b = g
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

Residue mod_pow(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (modulus < 2) {
    throw std::domain_error("mod_pow modulus must be >= 2, got " + modulus.str());
  }
  if (exponent < 0) {
    throw std::domain_error("mod_pow exponent must be nonnegative, got " + exponent.str());
  }
  Integer result = 1;
  Integer b = mod_reduce(base, modulus);
  Integer e = exponent;
  while (e != 0) {
    if ((e & 1) != 0) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return Residue(result, modulus);
}

Residue mod_inverse(const Integer& a, const Integer& modulus) {
  if (modulus < 2) {
    throw std::domain_error("mod_inverse modulus must be >= 2, got " + modulus.str());
  }
  Integer reduced = mod_reduce(a, modulus);
  ExtGcdResult id = ext_gcd(reduced, modulus);
  if (id.g != 1) {
    throw NotInvertibleError(a, modulus, id.g);
  }
  return Residue(id.u, modulus);
}

Residue crt_combine(const CongruenceSystem& system) {
  const auto& entries = system.entries;
  if (entries.empty()) {
    throw std::domain_error("crt_combine requires at least one congruence");
  }
  for (const auto& entry : entries) {
    if (entry.modulus < 2) {
      throw std::domain_error("congruence modulus must be >= 2, got " + entry.modulus.str());
    }
    if (entry.residue < 0 || entry.residue >= entry.modulus) {
      throw std::domain_error("congruence residue " + entry.residue.str() +
                              " is not reduced modulo " + entry.modulus.str());
    }
  }
  // Pairwise coprimality up front, so the error can name the offending pair
  // of input moduli rather than some folded product.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      Integer g = boost::multiprecision::gcd(entries[i].modulus, entries[j].modulus);
      if (g != 1) {
        throw NonCoprimeModuliError(i, j, entries[i].modulus, entries[j].modulus, g);
      }
    }
  }

  Integer x = entries[0].residue;
  Integer combined = entries[0].modulus;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const Integer& m = entries[i].modulus;
    // u*combined + v*m = 1, so combined*u ≡ 1 (mod m); shift x by a multiple
    // of `combined` to land on the target residue mod m.
    ExtGcdResult id = ext_gcd(combined, m);
    Integer shift = mod_reduce((entries[i].residue - x) * id.u, m);
    x += combined * shift;
    combined *= m;
    x = mod_reduce(x, combined);
  }
  return Residue(x, combined);
}

}  // namespace automorph
