#pragma once

// Enumeration of idempotent residues x with x^2 ≡ x (mod B^n).
//
// Writing B = p_1^e_1 ... p_m^e_m, a residue is idempotent mod B^n exactly
// when it is ≡ 0 or 1 modulo each p_i^(n*e_i); x and x-1 are coprime, so the
// prime powers split cleanly between them. Each of the 2^m selector tuples
// in {0,1}^m therefore yields one solution by CRT, and those are all of
// them. The all-0 and all-1 tuples give the trivial solutions 0 and 1;
// complementary tuples pair into twins whose residues sum to B^n + 1.

#include "automorph/factorization.hpp"
#include "automorph/integer.hpp"
#include "automorph/modular.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace automorph {

/// Element of {0,1}^m: coordinate i selects residue 0 or 1 modulo the i-th
/// prime-power factor (factors in ascending-prime order).
struct SelectorTuple {
  std::vector<std::uint8_t> bits;

  /// Encode/decode against a class index with coordinate 0 least significant.
  /// Nontrivial classes are 1 .. 2^m - 2; index 0 is the 0-class and
  /// 2^m - 1 the 1-class.
  static SelectorTuple from_index(std::uint64_t index, std::size_t m);
  std::uint64_t index() const;

  SelectorTuple complement() const;
  bool all_zero() const;
  bool all_one() const;
  bool trivial() const { return all_zero() || all_one(); }

  /// Rendered like "(1,0)".
  std::string str() const;

  friend bool operator==(const SelectorTuple& a, const SelectorTuple& b) {
    return a.bits == b.bits;
  }
};

/// One idempotent residue together with its class and base-B numeral.
struct IdempotentSolution {
  std::uint64_t base = 0;
  unsigned width_n = 0;
  Integer residue;
  SelectorTuple selector;
  std::vector<std::uint64_t> digits;  // most significant first, zero-padded to width_n
};

/// Two nontrivial solutions with complementary selectors;
/// r.residue + s.residue = B^n + 1.
struct TwinPair {
  IdempotentSolution r;
  IdempotentSolution s;
};

/// All solutions of x^2 ≡ x (mod base^n), sorted by residue ascending:
/// 2^m of them with include_trivial, 2^m - 2 without.
std::vector<IdempotentSolution> enumerate_idempotents(std::uint64_t base, unsigned n,
                                                      bool include_trivial);

/// The unique solution in [0, B^n) of the selector's congruence system.
IdempotentSolution solve_selector(const Factorization& f, unsigned n, const SelectorTuple& t);

/// The solution with complemented selector. Involutive on nontrivial
/// solutions; rejects trivial input (0 and 1 pair with each other and their
/// sum is 1, not B^n + 1).
IdempotentSolution twin_of(const IdempotentSolution& sol);

/// The unique width-n_new solution in the same selector class. Recomputes by
/// CRT and checks the prefix property (new residue ≡ old mod B^old_width) as
/// a live consistency check.
IdempotentSolution extend_solution(const IdempotentSolution& sol, unsigned n_new);

/// The nontrivial twins at width n, ordered by class index of the first
/// member; the first member of each pair is the class with the smaller
/// index. Empty when m = 1.
std::vector<TwinPair> twin_pairs(const Factorization& f, unsigned n);

/// 5^(2^(n-2) - 1) mod 2^n, a multiplicative inverse of 5 modulo 2^n.
/// Defined for n >= 2 only (the exponent formula needs it).
Residue inverse_of_five_mod_pow2(unsigned n);

/// Base-10 closed forms for n >= 2: r = 5^(n*2^(n-2)) mod 10^n and
/// s = 10^n + 1 - r. These are the two nontrivial idempotents mod 10^n.
std::pair<Residue, Residue> closed_form_base10(unsigned n);

// Desk-scale exhaustive scans finish in seconds up to this many residues.
inline constexpr std::uint64_t kDefaultOracleCeiling = 10'000'000;

/// Independent ground truth: ascending list of all x in [0, base^n) with
/// x*(x-1) ≡ 0, found by exhaustive scan. Throws OracleTooLargeError when
/// base^n exceeds the ceiling.
std::vector<std::uint64_t> brute_force_idempotents(std::uint64_t base, unsigned n,
                                                   std::uint64_t ceiling = kDefaultOracleCeiling);

}  // namespace automorph
