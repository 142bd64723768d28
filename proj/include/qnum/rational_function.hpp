#pragma once

#include <string>

#include <gmpxx.h>

#include "qnum/int_polynomial.hpp"
#include "qnum/laurent.hpp"

namespace qnum {

/// Reduced quotient of integer polynomials. Canonical form: num and den share
/// no polynomial factor (integer content included), and the lowest-order
/// nonzero coefficient of den is positive.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(IntPolynomial::one()) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);
  explicit RationalFunction(IntPolynomial num) : num_(std::move(num)), den_(IntPolynomial::one()) {}

  static RationalFunction from_laurent(const LaurentPolynomial& num, const LaurentPolynomial& den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& rhs) const = default;

  RationalFunction inverse() const;
  /// f(1/q), normalized back to a polynomial quotient.
  RationalFunction substitute_q_inverse() const;

  /// Exact value at x; raises ZeroDenominator if den(x)=0.
  mpq_class eval(const mpq_class& x) const;
  std::complex<double> eval(std::complex<double> z) const;
  mpq_class at_one() const { return eval(mpq_class(1)); }

  /// `num/den` with multi-term sides parenthesized; bare num when den == 1.
  std::string display() const;

private:
  void reduce();
  IntPolynomial num_, den_;
};

/// Reduced, sign-normalized quotient (the canonicalization entry point).
RationalFunction rational_simplify(IntPolynomial num, IntPolynomial den);

}  // namespace qnum
