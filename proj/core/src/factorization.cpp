#include "automorph/factorization.hpp"

#include "automorph/errors.hpp"

#include <stdexcept>

namespace automorph {

Factorization factor_base(std::uint64_t base, std::uint64_t ceiling) {
  if (base < 2) {
    throw std::domain_error("base must be >= 2, got " + std::to_string(base));
  }
  if (base > ceiling) {
    throw UnsupportedBaseError(base, ceiling);
  }
  Factorization f;
  f.base = base;
  std::uint64_t rem = base;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= rem / p; p += 2) {
    strip(p);
  }
  if (rem > 1) f.factors.push_back({rem, 1});  // leftover > sqrt is prime
  return f;
}

std::vector<Integer> prime_power_moduli(const Factorization& f, unsigned n) {
  if (n < 1) {
    throw std::domain_error("width n must be >= 1");
  }
  std::vector<Integer> moduli;
  moduli.reserve(f.factors.size());
  for (const auto& pp : f.factors) {
    moduli.push_back(int_pow(Integer(pp.prime), std::uint64_t{n} * pp.exponent));
  }
  return moduli;
}

}  // namespace automorph
