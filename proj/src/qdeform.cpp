#include "qnum/qdeform.hpp"

#include <utility>

#include "qnum/errors.hpp"

namespace qnum {

namespace {

LaurentPolynomial lp(std::initializer_list<long> coeffs, int low = 0) {
  return {IntPolynomial(coeffs), low};
}

}  // namespace

QMatrix QMatrix::identity() {
  return {lp({1}), lp({}), lp({}), lp({1})};
}

QMatrix QMatrix::generator_t() {
  return {lp({0, 1}), lp({1}), lp({}), lp({1})};
}

QMatrix QMatrix::generator_s() {
  return {lp({}), lp({-1}), lp({0, 1}), lp({})};
}

QMatrix QMatrix::generator_t_inverse() {
  return {lp({1}, -1), lp({-1}, -1), lp({}), lp({1})};
}

QMatrix QMatrix::t_power(std::int64_t k) {
  // T^k: x -> q^k x + [k]_q with [k]_q = (1 + ... + q^{k-1}), and for k < 0
  // the exact inverse: x -> q^k (x - [|k|]_q(q) q^{...}) handled directly.
  if (k == 0) return identity();
  if (k > 0) {
    return {LaurentPolynomial(IntPolynomial::one(), static_cast<int>(k)),
            LaurentPolynomial(IntPolynomial::q_integer(k)), lp({}), lp({1})};
  }
  // T^{-m}: x -> (x - [m]_q)/q^m = q^{-m} x - q^{-m} [m]_q
  std::int64_t m = -k;
  return {LaurentPolynomial(IntPolynomial::one(), static_cast<int>(-m)),
          LaurentPolynomial(-IntPolynomial::q_integer(m), static_cast<int>(-m)), lp({}),
          lp({1})};
}

QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

LaurentPolynomial QMatrix::determinant() const { return a * d - b * c; }

RationalFunction QMatrix::apply(const RationalFunction& x) const {
  RationalFunction ra = RationalFunction::from_laurent(a, LaurentPolynomial(IntPolynomial::one()));
  RationalFunction rb = RationalFunction::from_laurent(b, LaurentPolynomial(IntPolynomial::one()));
  RationalFunction rc = RationalFunction::from_laurent(c, LaurentPolynomial(IntPolynomial::one()));
  RationalFunction rd = RationalFunction::from_laurent(d, LaurentPolynomial(IntPolynomial::one()));
  RationalFunction den = rc * x + rd;
  if (den.is_zero()) raise(errc::zero_denominator, "matrix action maps value to infinity");
  return (ra * x + rb) / den;
}

TruncatedLaurentSeries QMatrix::apply(const TruncatedLaurentSeries& x) const {
  TruncatedLaurentSeries num = b + a * x;
  TruncatedLaurentSeries den = d + c * x;
  return num / den;
}

QMatrix word_matrix(const std::vector<WordLetter>& word) {
  QMatrix m = QMatrix::identity();
  for (WordLetter w : word) {
    switch (w) {
      case WordLetter::T: m = m * QMatrix::generator_t(); break;
      case WordLetter::S: m = m * QMatrix::generator_s(); break;
      case WordLetter::TInverse: m = m * QMatrix::generator_t_inverse(); break;
    }
  }
  return m;
}

RationalFunction apply_word(const std::vector<WordLetter>& word, const RationalFunction& x) {
  return word_matrix(word).apply(x);
}

TruncatedLaurentSeries apply_word(const std::vector<WordLetter>& word,
                                  const TruncatedLaurentSeries& x) {
  return word_matrix(word).apply(x);
}

namespace {

// Value of a matrix at infinity: first-column ratio a/c.
RationalFunction value_at_infinity(const QMatrix& m) {
  if (m.c.is_zero()) raise(errc::zero_denominator, "matrix fixes infinity");
  return RationalFunction::from_laurent(m.a, m.c);
}

}  // namespace

QRational q_rational_recursive(const mpz_class& r, const mpz_class& s) {
  if (s <= 0) raise(errc::invalid_argument, "denominator must be positive");
  mpz_class g, ar = abs(r);
  mpz_gcd(g.get_mpz_t(), ar.get_mpz_t(), s.get_mpz_t());
  if (r == 0) {
    if (s != 1) raise(errc::not_coprime, "0 must be written as 0/1");
    return {RationalFunction(), 0, 1};
  }
  if (g != 1) raise(errc::not_coprime, "r and s must be coprime");
  // Continued-fraction word of r/s with a floor first step, so negatives
  // replay through T^{a1} with a1 < 0.
  std::vector<std::int64_t> word;
  mpz_class a = r, b = s;
  while (b != 0) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (q.fits_slong_p() == 0)
      raise(errc::invalid_argument, "continued-fraction coefficient too large");
    word.push_back(q.get_si());
    a = b;
    b = rem;
  }
  QMatrix m = QMatrix::identity();
  int sign = +1;
  for (std::int64_t c : word) {
    m = m * QMatrix::t_power(sign * c) * QMatrix::generator_s();
    sign = -sign;
  }
  QRational out{value_at_infinity(m), r, s};
  if (out.value.eval(mpq_class(1)) != mpq_class(r) / mpq_class(s))
    raise(errc::internal_error, "q-rational does not specialize to r/s at q=1");
  return out;
}

namespace {

// [a]_{q^{-1}} = q^{1-a} [a]_q as a Laurent polynomial.
LaurentPolynomial q_integer_inverse_var(std::int64_t a) {
  return {IntPolynomial::q_integer(a), static_cast<int>(1 - a)};
}

}  // namespace

QRational q_cf_regular_eval(const ContinuedFraction& cf) {
  cf.validate();
  if (cf.kind != CFKind::Regular || !cf.finite())
    raise(errc::invalid_argument, "q_cf_regular_eval expects a finite regular expansion");
  std::vector<std::int64_t> a = cf.prefix;
  if (a.size() % 2 != 0) {
    // even-length spelling is the canonical one: [...,a] = [...,a-1,1]
    if (a.back() >= 2 || a.size() == 1) {
      a.back() -= 1;
      a.push_back(1);
    } else {
      a.pop_back();
      a.back() += 1;
    }
  }
  // Bottom-up over levels 2m, 2m-1, ..., 1: odd levels carry [a]_q and pass
  // q^{a} down, even levels carry [a]_{q^{-1}} and pass q^{-a}.
  RationalFunction v;
  for (std::size_t i = a.size(); i-- > 0;) {
    const bool odd = (i % 2 == 0);  // 1-based position i+1
    LaurentPolynomial head = odd ? LaurentPolynomial(IntPolynomial::q_integer(a[i]))
                                 : q_integer_inverse_var(a[i]);
    LaurentPolynomial numer = LaurentPolynomial::q_power(
        odd ? static_cast<int>(a[i]) : static_cast<int>(-a[i]));
    RationalFunction head_r = RationalFunction::from_laurent(
        head, LaurentPolynomial(IntPolynomial::one()));
    RationalFunction numer_r = RationalFunction::from_laurent(
        numer, LaurentPolynomial(IntPolynomial::one()));
    if (i + 1 == a.size()) {
      v = head_r;
    } else {
      if (v.is_zero()) raise(errc::zero_denominator, "vanishing tail in continued fraction");
      v = head_r + numer_r / v;
    }
  }
  mpq_class target = cf.value_exact();
  QRational out{v, target.get_num(), target.get_den()};
  return out;
}

QRational q_cf_hj_eval(const ContinuedFraction& cf) {
  cf.validate();
  if (cf.kind != CFKind::HJ || !cf.finite())
    raise(errc::invalid_argument, "q_cf_hj_eval expects a finite Hirzebruch-Jung expansion");
  const auto& c = cf.prefix;
  RationalFunction v;
  for (std::size_t i = c.size(); i-- > 0;) {
    RationalFunction head(IntPolynomial::q_integer(c[i]));
    if (i + 1 == c.size()) {
      v = head;
    } else {
      if (v.is_zero()) raise(errc::zero_denominator, "vanishing tail in continued fraction");
      RationalFunction numer(IntPolynomial::monomial(1, static_cast<int>(c[i] - 1)));
      v = head - numer / v;
    }
  }
  mpq_class target = cf.value_exact();
  return {v, target.get_num(), target.get_den()};
}

QRational q_negate(const QRational& x) {
  RationalFunction inv_var = x.value.substitute_q_inverse();
  RationalFunction result = -(inv_var / RationalFunction(IntPolynomial::variable()));
  return {result, -x.r, x.s};
}

QRational q_invert(const QRational& x) {
  if (x.value.is_zero()) raise(errc::zero_inverse, "[1/x]_q undefined at x = 0");
  RationalFunction inv_var = x.value.substitute_q_inverse();
  // 1/x keeps the sign of x; the source fraction swaps components.
  mpz_class nr = x.s, ns = x.r;
  if (ns < 0) {
    ns = -ns;
    nr = -nr;
  }
  return {inv_var.inverse(), nr, ns};
}

}  // namespace qnum
