#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qnum/int_polynomial.hpp"

namespace qnum {

/// Finite Laurent polynomial: poly * q^low, with poly(0) != 0 unless zero.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(IntPolynomial poly, int low = 0);
  static LaurentPolynomial q_power(int k) { return {IntPolynomial::one(), k}; }

  bool is_zero() const { return poly_.is_zero(); }
  const IntPolynomial& poly() const { return poly_; }
  int low() const { return low_; }
  int high() const { return low_ + poly_.degree(); }

  LaurentPolynomial operator-() const { return {-poly_, low_}; }
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  bool operator==(const LaurentPolynomial& rhs) const = default;

private:
  IntPolynomial poly_;
  int low_ = 0;
};

/// Power/Laurent series known modulo q^order: coefficient of q^e is coeffs[e-low]
/// for low <= e < order; coefficients at exponents >= order are unknown, not zero.
class TruncatedLaurentSeries {
public:
  TruncatedLaurentSeries() = default;
  TruncatedLaurentSeries(int low, std::vector<mpz_class> coeffs);

  static TruncatedLaurentSeries constant(const mpz_class& c, int order);

  int low() const { return low_; }
  int order() const { return low_ + static_cast<int>(coeffs_.size()); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of q^e; requires low() <= e < order().
  const mpz_class& coeff(int e) const;
  bool is_known_zero() const;
  /// Exponent of the lowest known nonzero coefficient, or order() if all known
  /// coefficients vanish.
  int first_nonzero() const;

  TruncatedLaurentSeries truncated(int new_order) const;
  /// Multiply by q^k (k may be negative).
  TruncatedLaurentSeries shifted(int k) const;

  TruncatedLaurentSeries operator-() const;
  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a,
                                          const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a,
                                          const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a,
                                          const TruncatedLaurentSeries& b);
  /// Exact series division; requires integer quotient coefficients.
  friend TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a,
                                          const TruncatedLaurentSeries& b);

  friend TruncatedLaurentSeries operator*(const LaurentPolynomial& p,
                                          const TruncatedLaurentSeries& s);
  friend TruncatedLaurentSeries operator+(const LaurentPolynomial& p,
                                          const TruncatedLaurentSeries& s);

  /// Equality of the known coefficient windows (same low, order, coefficients).
  bool operator==(const TruncatedLaurentSeries& rhs) const = default;
  /// True when both series agree on every exponent below min(order, rhs.order).
  bool agrees_with(const TruncatedLaurentSeries& rhs) const;

  /// Partial sum at z (numeric).
  std::complex<double> eval(std::complex<double> z) const;

  std::string display() const;
  /// OEIS b-file style dump: one `e coeff` line per known exponent.
  std::string bfile() const;

private:
  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

class RationalFunction;

/// Taylor/Laurent expansion of f at q=0: result is congruent to f mod q^order
/// (all exponents below `order` known). If den(0)=0 the result has low < 0.
TruncatedLaurentSeries taylor_expand(const RationalFunction& f, int order);

}  // namespace qnum
