#pragma once

#include "qnum/continued_fraction.hpp"
#include "qnum/int_polynomial.hpp"
#include "qnum/laurent.hpp"
#include "qnum/qdeform.hpp"

namespace qnum {

/// Power series of a q-deformed real number, together with the continued
/// fraction it came from and the stabilized coefficient count.
struct QRealSeries {
  TruncatedLaurentSeries series;
  ContinuedFraction cf;
  /// Coefficients at exponents below this bound agreed across the required
  /// run of convergents (equals series.order() on success).
  int stabilized_upto = 0;
};

struct StabilizationOptions {
  /// Consecutive convergents whose truncations must coincide.
  int agree_run = 3;
  /// One extra deeper convergent re-checks the run before acceptance.
  int confirm = 1;
  /// Convergent depth cap; badly converging inputs fail loudly instead of
  /// spinning.
  int max_depth = 400;
};

/// Stabilized Taylor series of the value of `cf` through exponent order-1.
/// Works for any positive value (inputs below 1 are shifted through
/// [x+1]_q = q [x]_q + 1 and shifted back). Raises StabilizationNotReached
/// when the convergents of a finite expansion run out or the depth cap hits.
QRealSeries q_real_series(const ContinuedFraction& cf, int order,
                          const StabilizationOptions& opts = {});

/// Coefficients A, B, C of the integer-polynomial quadratic
/// A X^2 + B X + C = 0 satisfied by the q-deformation of the periodic
/// continued fraction's value. Prefixes conjugate the fixed-point quadratic
/// through their Moebius map. Raises DegenerateQuadratic when the leading
/// coefficient collapses (rational fixed point).
struct FunctionalEquation {
  IntPolynomial a, b, c;
  IntPolynomial discriminant() const;
};

FunctionalEquation functional_equation(const ContinuedFraction& cf);

/// A X^2 + B X + C evaluated on a truncated series (for vanishing checks).
TruncatedLaurentSeries quadratic_apply(const FunctionalEquation& eq,
                                       const TruncatedLaurentSeries& x);

}  // namespace qnum
