#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qnum/continued_fraction.hpp"
#include "qnum/laurent.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

/// 2x2 matrix over Laurent polynomials in q; the fractional-linear action of
/// the deformed modular-group generators lives here.
struct QMatrix {
  LaurentPolynomial a, b, c, d;

  static QMatrix identity();
  /// T_q = [[q, 1], [0, 1]]: x -> q x + 1.
  static QMatrix generator_t();
  /// S_q = [[0, -1], [q, 0]]: x -> -1/(q x).
  static QMatrix generator_s();
  /// T_q^{-1}: x -> (x - 1)/q.
  static QMatrix generator_t_inverse();
  /// T_q^k for any integer k.
  static QMatrix t_power(std::int64_t k);

  friend QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs);
  bool operator==(const QMatrix& rhs) const = default;

  LaurentPolynomial determinant() const;
  /// Fractional-linear action (a x + b)/(c x + d) on an exact value.
  RationalFunction apply(const RationalFunction& x) const;
  /// Same action modulo the series truncation.
  TruncatedLaurentSeries apply(const TruncatedLaurentSeries& x) const;
};

enum class WordLetter { T, S, TInverse };

QMatrix word_matrix(const std::vector<WordLetter>& word);
RationalFunction apply_word(const std::vector<WordLetter>& word, const RationalFunction& x);
TruncatedLaurentSeries apply_word(const std::vector<WordLetter>& word,
                                  const TruncatedLaurentSeries& x);

/// q-deformed rational: reduced rational function plus its source fraction.
struct QRational {
  RationalFunction value;
  mpz_class r, s;
};

/// [r/s]_q from the defining recurrences [x+1]_q = q[x]_q + 1 and
/// [-1/x]_q = -1/(q [x]_q), replaying the continued-fraction word of r/s
/// through the generator matrices. Accepts any sign of r; s > 0, coprime.
QRational q_rational_recursive(const mpz_class& r, const mpz_class& s);

/// Evaluation of the q-deformed regular continued fraction (alternating
/// [a]_q / [a]_{q^{-1}} levels with q^{+-a} numerators). Finite expansions;
/// odd lengths are normalized to even first.
QRational q_cf_regular_eval(const ContinuedFraction& cf);

/// Evaluation of the q-deformed Hirzebruch-Jung continued fraction
/// ([c]_q levels with q^{c-1} numerators). Finite expansions.
QRational q_cf_hj_eval(const ContinuedFraction& cf);

/// [-x]_q = -[x]_{q^{-1}} / q.
QRational q_negate(const QRational& x);
/// [1/x]_q = 1 / [x]_{q^{-1}}; raises ZeroInverse at x = 0.
QRational q_invert(const QRational& x);

}  // namespace qnum
