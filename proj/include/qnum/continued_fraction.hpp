#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qnum {

enum class CFKind { Regular, HJ };

/// Finite or eventually periodic continued fraction. Regular expansions use
/// plus signs (coefficients >= 1, first >= 0, finite ones even-length);
/// Hirzebruch-Jung expansions use minus signs (coefficients >= 2, first >= 1).
/// A nonempty period means the value is a quadratic irrational.
struct ContinuedFraction {
  CFKind kind = CFKind::Regular;
  std::vector<std::int64_t> prefix;
  std::vector<std::int64_t> period;

  bool finite() const { return period.empty(); }
  std::size_t length() const { return prefix.size(); }
  /// Coefficient at 1-based position i, cycling through the period.
  std::int64_t at(std::size_t i) const;

  /// Raises MalformedExpansion when the coefficient rules are violated.
  void validate() const;

  /// Value as a double; periodic expansions are iterated to convergence.
  double value_approx() const;
  /// Exact value; finite expansions only.
  mpq_class value_exact() const;

  /// `[a1,...;(p1,...)]` for regular, `[[c1,...;(p1,...)]]` for HJ.
  std::string text() const;
  /// Accepts both bracket forms plus the `hj:` prefix spelling.
  static ContinuedFraction parse(const std::string& text);

  bool operator==(const ContinuedFraction& rhs) const = default;
};

/// Even-length regular expansion of r/s (Euclid, last coefficient split when
/// needed so that [a1,...,an,1] == [a1,...,an+1] never leaves two spellings).
ContinuedFraction regular_cf_expand(const mpz_class& r, const mpz_class& s);

/// Hirzebruch-Jung (minus-sign) expansion of r/s via ceiling division.
ContinuedFraction hj_cf_expand(const mpz_class& r, const mpz_class& s);

/// Hirzebruch conversion: odd-index coefficients gain 2 (the first gains 1),
/// even-index coefficients a produce runs of (a-1) twos. Works on
/// (prefix, period) pairs by aligning the period to even length and phase.
ContinuedFraction regular_to_hj(const ContinuedFraction& cf);

/// Inverse conversion; raises MalformedExpansion when the 2-run structure has
/// no regular preimage (e.g. an all-twos period).
ContinuedFraction hj_to_regular(const ContinuedFraction& cf);

/// First n convergents as reduced integer pairs (numerator, denominator).
/// Raises TruncationBeyondFinite when n exceeds a finite expansion.
std::vector<std::pair<mpz_class, mpz_class>> convergents(const ContinuedFraction& cf, int n);

}  // namespace qnum
