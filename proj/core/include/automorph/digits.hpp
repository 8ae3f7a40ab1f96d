#pragma once

// Base-B digit extraction, exact-width classification, twin digit-sum
// checks, and the counting census with its theoretical bounds.

#include "automorph/engine.hpp"
#include "automorph/integer.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace automorph {

/// Fixed-width base-B numeral, most significant digit first, zero-padded.
struct DigitString {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> digits;

  std::size_t width() const { return digits.size(); }

  /// Positional value of the numeral.
  Integer value() const;

  /// Text form: 0-9A-Z for bases <= 36, bracketed decimal digit list like
  /// "[12.0.31]" above that.
  std::string str() const;
};

/// Zero-padded width-`width` numeral of x. x >= base^width overflows.
DigitString to_digits(const Integer& x, std::uint64_t base, unsigned width);

/// Same rendering rule as DigitString::str, for any digit vector.
std::string render_digits(const std::vector<std::uint64_t>& digits, std::uint64_t base);

/// True iff the solution occupies its full width: residue >= B^(n-1),
/// i.e. the leading digit is nonzero (for n = 1 this reads residue >= 1).
bool is_exact_width(const IdempotentSolution& sol);

/// Per-(base, n) counts of exact-width solutions next to the theoretical
/// bounds. lower_bound/upper_bound are the width >= 2 bounds 2^(m-1)-1 and
/// 2^m-2; n1_exact (= 2^m - 1) is populated only at width 1, where the count
/// is exact rather than bounded.
struct WidthCensus {
  std::uint64_t base = 0;
  unsigned width_n = 0;
  std::size_t m = 0;
  std::uint64_t exact_width_count = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::optional<std::uint64_t> n1_exact;
};

/// Count exact-width solutions: nontrivial ones for n >= 2 (0 and 1 have
/// fewer than n digits), all positive ones for n = 1 (1 included, 0 not).
/// A count outside the bounds throws BoundViolationError — that is an
/// implementation bug, not a data condition.
WidthCensus count_exact_width(std::uint64_t base, unsigned n);

enum class LeadingClass { one, two };

const char* to_string(LeadingClass c);

/// Leading digits of one twin pair. For width >= 2 they sum to base - 1, so
/// at most one can be zero: `one` means exactly one twin has exact width,
/// `two` means both do.
struct TwinLeadingRecord {
  std::uint64_t base = 0;
  unsigned width_n = 0;
  Integer r_residue;
  Integer s_residue;
  std::uint64_t r_leading_digit = 0;
  std::uint64_t s_leading_digit = 0;
  LeadingClass one_or_two = LeadingClass::two;
};

/// Audit one pair (width >= 2): checks the base-1 digit sum and classifies.
TwinLeadingRecord twin_digit_audit(const TwinPair& pair);

/// One record per nontrivial twin per n in [n_from, n_to], n_from >= 2.
/// The one/two classification is recorded, never predicted.
std::vector<TwinLeadingRecord> leading_digit_stats(std::uint64_t base, unsigned n_from,
                                                   unsigned n_to);

/// CSV export, header row mandatory:
/// base,n,r_residue,s_residue,r_leading,s_leading,classification
/// Residues are decimal strings; classification is `one` or `two`.
void write_stats_csv(std::ostream& out, const std::vector<TwinLeadingRecord>& records);

}  // namespace automorph
