#include "automorph/engine.hpp"

#include "automorph/digits.hpp"
#include "automorph/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace automorph {

SelectorTuple SelectorTuple::from_index(std::uint64_t index, std::size_t m) {
  SelectorTuple t;
  t.bits.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    t.bits[i] = static_cast<std::uint8_t>((index >> i) & 1);
  }
  return t;
}

std::uint64_t SelectorTuple::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) idx |= std::uint64_t{1} << i;
  }
  return idx;
}

SelectorTuple SelectorTuple::complement() const {
  SelectorTuple t;
  t.bits.reserve(bits.size());
  for (auto b : bits) t.bits.push_back(b ? 0 : 1);
  return t;
}

bool SelectorTuple::all_zero() const {
  return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

bool SelectorTuple::all_one() const {
  return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 1; });
}

std::string SelectorTuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i > 0) s += ',';
    s += bits[i] ? '1' : '0';
  }
  s += ')';
  return s;
}

IdempotentSolution solve_selector(const Factorization& f, unsigned n, const SelectorTuple& t) {
  if (t.bits.size() != f.prime_count()) {
    throw std::invalid_argument("selector has " + std::to_string(t.bits.size()) +
                                " coordinates but the base has " +
                                std::to_string(f.prime_count()) + " prime factors");
  }
  CongruenceSystem system;
  system.entries.reserve(f.prime_count());
  for (std::size_t i = 0; i < f.prime_count(); ++i) {
    auto modulus = int_pow(Integer(f.factors[i].prime), std::uint64_t{n} * f.factors[i].exponent);
    system.entries.push_back({Integer(t.bits[i]), std::move(modulus)});
  }
  IdempotentSolution sol;
  sol.base = f.base;
  sol.width_n = n;
  sol.residue = crt_combine(system).value();
  sol.selector = t;
  sol.digits = to_digits(sol.residue, f.base, n).digits;
  return sol;
}

std::vector<IdempotentSolution> enumerate_idempotents(std::uint64_t base, unsigned n,
                                                      bool include_trivial) {
  Factorization f = factor_base(base);
  const std::size_t m = f.prime_count();
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<IdempotentSolution> solutions;
  solutions.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    SelectorTuple t = SelectorTuple::from_index(idx, m);
    if (!include_trivial && t.trivial()) continue;
    solutions.push_back(solve_selector(f, n, t));
  }
  std::sort(solutions.begin(), solutions.end(),
            [](const IdempotentSolution& a, const IdempotentSolution& b) {
              return a.residue < b.residue;
            });
  return solutions;
}

IdempotentSolution twin_of(const IdempotentSolution& sol) {
  if (sol.selector.trivial()) {
    throw std::domain_error("trivial solution " + sol.residue.str() +
                            " has no twin: 0 and 1 pair with each other with sum 1");
  }
  Factorization f = factor_base(sol.base);
  return solve_selector(f, sol.width_n, sol.selector.complement());
}

IdempotentSolution extend_solution(const IdempotentSolution& sol, unsigned n_new) {
  if (n_new <= sol.width_n) {
    throw std::domain_error("extension width " + std::to_string(n_new) +
                            " must exceed the current width " + std::to_string(sol.width_n));
  }
  Factorization f = factor_base(sol.base);
  IdempotentSolution extended = solve_selector(f, n_new, sol.selector);
  // Solutions in one class only ever grow by left-padded digits; anything
  // else means the engine is broken.
  Integer prefix_modulus = int_pow(Integer(sol.base), sol.width_n);
  if (extended.residue % prefix_modulus != sol.residue) {
    throw InvariantViolationError("class " + sol.selector.str() + " extension from width " +
                                  std::to_string(sol.width_n) + " to " + std::to_string(n_new) +
                                  " lost its prefix (base " + std::to_string(sol.base) + ")");
  }
  return extended;
}

std::vector<TwinPair> twin_pairs(const Factorization& f, unsigned n) {
  const std::size_t m = f.prime_count();
  std::vector<TwinPair> pairs;
  if (m < 2) return pairs;  // a prime power has only the trivial classes
  const std::uint64_t all_ones = (std::uint64_t{1} << m) - 1;
  // Class k pairs with its complement all_ones - k; k < all_ones - k keeps
  // one representative per twin and puts the smaller class index first.
  for (std::uint64_t k = 1; k < all_ones - k; ++k) {
    TwinPair pair;
    pair.r = solve_selector(f, n, SelectorTuple::from_index(k, m));
    pair.s = solve_selector(f, n, SelectorTuple::from_index(all_ones - k, m));
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

Residue inverse_of_five_mod_pow2(unsigned n) {
  if (n < 2) {
    throw std::domain_error("inverse_of_five_mod_pow2 requires n >= 2, got " + std::to_string(n));
  }
  Integer exponent = (Integer(1) << (n - 2)) - 1;  // 2^(n-2) - 1
  Integer modulus = Integer(1) << n;
  return mod_pow(5, exponent, modulus);
}

std::pair<Residue, Residue> closed_form_base10(unsigned n) {
  if (n < 2) {
    throw std::domain_error("closed_form_base10 requires n >= 2, got " + std::to_string(n));
  }
  Integer modulus = int_pow(10, n);
  Integer exponent = Integer(n) << (n - 2);  // n * 2^(n-2)
  Residue r = mod_pow(5, exponent, modulus);
  Residue s(modulus + 1 - r.value(), modulus);
  return {std::move(r), std::move(s)};
}

std::vector<std::uint64_t> brute_force_idempotents(std::uint64_t base, unsigned n,
                                                   std::uint64_t ceiling) {
  if (base < 2) {
    throw std::domain_error("base must be >= 2, got " + std::to_string(base));
  }
  if (n < 1) {
    throw std::domain_error("width n must be >= 1");
  }
  Integer modulus_big = int_pow(Integer(base), n);
  if (modulus_big > ceiling) {
    throw OracleTooLargeError(modulus_big, ceiling);
  }
  const auto modulus = modulus_big.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> hits;
  for (std::uint64_t x = 0; x < modulus; ++x) {
    // 128-bit product: x*x overflows 64 bits once a caller raises the ceiling
    unsigned __int128 square = static_cast<unsigned __int128>(x) * x;
    if ((square - x) % modulus == 0) hits.push_back(x);
  }
  return hits;
}

}  // namespace automorph
