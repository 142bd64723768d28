#include "qnum/rational_function.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qnum/errors.hpp"

namespace qnum {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void RationalFunction::reduce() {
  if (den_.is_zero()) raise(errc::zero_denominator, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::one();
    return;
  }
  IntPolynomial g = IntPolynomial::gcd(num_, den_);
  if (!(g == IntPolynomial::one())) {
    num_ = *num_.divided_exactly_by(g);
    den_ = *den_.divided_exactly_by(g);
  }
  if (den_.coeff(den_.valuation()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::from_laurent(const LaurentPolynomial& num,
                                                const LaurentPolynomial& den) {
  if (den.is_zero()) raise(errc::zero_denominator, "rational function with zero denominator");
  int m = std::min(num.low(), den.low());
  return {num.poly().shifted(num.low() - m), den.poly().shifted(den.low() - m)};
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) raise(errc::zero_denominator, "division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) raise(errc::zero_inverse, "inverse of zero");
  return {den_, num_};
}

RationalFunction RationalFunction::substitute_q_inverse() const {
  if (is_zero()) return {};
  int w = std::max(num_.degree(), den_.degree());
  return {num_.mirror(w), den_.mirror(w)};
}

mpq_class RationalFunction::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) raise(errc::zero_denominator, "denominator vanishes at evaluation point");
  mpq_class r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
  return num_.eval(z) / den_.eval(z);
}

namespace {
bool single_term(const IntPolynomial& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}
}  // namespace

std::string RationalFunction::display() const {
  if (den_ == IntPolynomial::one()) return num_.display();
  std::ostringstream os;
  if (single_term(num_))
    os << num_.display();
  else
    os << "(" << num_.display() << ")";
  os << "/";
  if (single_term(den_))
    os << den_.display();
  else
    os << "(" << den_.display() << ")";
  return os.str();
}

RationalFunction rational_simplify(IntPolynomial num, IntPolynomial den) {
  return {std::move(num), std::move(den)};
}

}  // namespace qnum
