#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qnum {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; the vector carries no
/// trailing zeros, and the zero polynomial is the empty vector.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return IntPolynomial{1}; }
  static IntPolynomial variable() { return IntPolynomial{0, 1}; }
  static IntPolynomial monomial(mpz_class c, int exponent);
  /// Euler q-integer [n]_q = 1 + q + ... + q^{n-1}, n >= 0.
  static IntPolynomial q_integer(long n);
  /// Gaussian binomial (4 choose 2)_q = 1 + q + 2q^2 + q^3 + q^4.
  static IntPolynomial gauss_binomial_4_2();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of q^k (zero outside the stored range).
  const mpz_class& coeff(int k) const;
  const mpz_class& leading() const;
  /// Exponent of the lowest nonzero term; -1 for zero.
  int valuation() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  bool operator==(const IntPolynomial& rhs) const = default;

  /// Multiply by q^k, k >= 0.
  IntPolynomial shifted(int k) const;
  /// Quotient by q^k; requires valuation() >= k.
  IntPolynomial unshifted(int k) const;
  /// q^weight * p(1/q); requires weight >= degree(). Reverses coefficients.
  IntPolynomial mirror(int weight) const;

  IntPolynomial derivative() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  std::complex<double> eval(std::complex<double> z) const;
  std::complex<long double> eval(std::complex<long double> z) const;

  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  mpz_class content() const;
  IntPolynomial primitive_part() const;

  /// Exact quotient if divisor divides *this in Z[q], nullopt otherwise.
  std::optional<IntPolynomial> divided_exactly_by(const IntPolynomial& divisor) const;
  /// s with s*s == *this, if one exists in Z[q].
  std::optional<IntPolynomial> sqrt_exact() const;

  /// Polynomial gcd in Z[q] via the primitive pseudo-remainder sequence;
  /// result is primitive-up-to-integer-content with positive leading term:
  /// gcd(content) * gcd(primitive parts).
  static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

  /// Square-free part: p / gcd(p, p'), primitive, positive leading coefficient.
  IntPolynomial squarefree_part() const;

  /// Interchange text form `c0 + c1*q + c2*q^2 + ...` (every coefficient explicit).
  std::string text() const;
  /// Compact human form, e.g. `1+2q+q^2+q^3`.
  std::string display() const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact product (degree additive).
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

struct EvalResult {
  std::complex<double> value;
  /// Running Horner error bound (absolute).
  double error_bound;
};

/// Horner evaluation with a standard running error bound.
EvalResult poly_eval_complex(const IntPolynomial& p, std::complex<double> z);

}  // namespace qnum
