#include "qnum/qseries.hpp"

#include <algorithm>
#include <utility>

#include "qnum/errors.hpp"

namespace qnum {

namespace {

// Hirzebruch-Jung form of the input with the head coefficient lifted so the
// value is >= 1; returns the applied integer shift.
std::pair<ContinuedFraction, int> to_hj_shifted(const ContinuedFraction& cf) {
  ContinuedFraction work = cf;
  work.validate();
  int shift = 0;
  // Only an explicit small head coefficient can put the value below 1, so a
  // shift of at most 1 is ever needed and the prefix is nonempty then.
  if (work.kind == CFKind::Regular) {
    if (!work.prefix.empty() && work.prefix.front() < 1) {
      shift = static_cast<int>(1 - work.prefix.front());
      work.prefix.front() += shift;
    }
    work = regular_to_hj(work);
  } else if (!work.prefix.empty() && work.prefix.front() < 2) {
    shift = static_cast<int>(2 - work.prefix.front());
    work.prefix.front() += shift;
  }
  return {work, shift};
}

}  // namespace

QRealSeries q_real_series(const ContinuedFraction& cf, int order, const StabilizationOptions& opts) {
  if (order < 1) raise(errc::invalid_argument, "series order must be >= 1");
  auto [hj, shift] = to_hj_shifted(cf);
  const int ord = order + shift;
  const int need_run = opts.agree_run + opts.confirm;

  // Continuants of the HJ expansion truncated at q^ord. Denominators have
  // constant term 1, so series division stays in integers.
  const std::size_t max_k = hj.finite()
      ? hj.prefix.size()
      : static_cast<std::size_t>(std::max(opts.max_depth, need_run + 1));
  LaurentPolynomial one(IntPolynomial::one());

  auto truncate_poly = [&](const IntPolynomial& p) {
    if (p.degree() < ord) return p;
    std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().begin() + ord);
    return IntPolynomial(std::move(v));
  };

  IntPolynomial r_prev = IntPolynomial::one(), s_prev;  // (R_0, S_0) = (1, 0)
  IntPolynomial r_prev2, s_prev2;                        // k-2 column, unused at k = 1
  TruncatedLaurentSeries current;
  int run = 0;
  std::int64_t c_prev = 0;

  for (std::size_t k = 1; k <= max_k; ++k) {
    const std::int64_t ck = hj.at(k);
    IntPolynomial rk, sk;
    if (k == 1) {
      rk = truncate_poly(IntPolynomial::q_integer(ck));
      sk = IntPolynomial::one();
    } else {
      IntPolynomial head = IntPolynomial::q_integer(ck);
      const int e = static_cast<int>(c_prev - 1);
      rk = truncate_poly(head * r_prev - r_prev2.shifted(e));
      sk = truncate_poly(head * s_prev - s_prev2.shifted(e));
    }
    TruncatedLaurentSeries num(0, [&] {
      std::vector<mpz_class> v(static_cast<std::size_t>(ord), mpz_class(0));
      for (int i = 0; i <= rk.degree() && i < ord; ++i) v[static_cast<std::size_t>(i)] = rk.coeff(i);
      return v;
    }());
    TruncatedLaurentSeries den(0, [&] {
      std::vector<mpz_class> v(static_cast<std::size_t>(ord), mpz_class(0));
      for (int i = 0; i <= sk.degree() && i < ord; ++i) v[static_cast<std::size_t>(i)] = sk.coeff(i);
      return v;
    }());
    TruncatedLaurentSeries series_k = num / den;

    if (k > 1 && series_k == current)
      ++run;
    else
      run = 1;
    current = std::move(series_k);
    if (run >= need_run) {
      // Undo the integer shift: [x]_q = ([x+1]_q - 1)/q, repeated.
      TruncatedLaurentSeries result = current;
      for (int t = 0; t < shift; ++t) {
        if (result.coeff(0) != 1)
          raise(errc::internal_error, "shifted series must have constant term 1");
        std::vector<mpz_class> v(result.coeffs().begin() + 1, result.coeffs().end());
        result = TruncatedLaurentSeries(0, std::move(v));
      }
      return {std::move(result), cf, order};
    }

    r_prev2 = std::move(r_prev);
    s_prev2 = std::move(s_prev);
    r_prev = std::move(rk);
    s_prev = std::move(sk);
    c_prev = ck;
  }
  raise(errc::stabilization_not_reached,
        "first " + std::to_string(order) + " coefficients did not stabilize within " +
            std::to_string(max_k) + " convergents" +
            (hj.finite() ? " (finite expansion: rational value)" : ""));
}

namespace {

LaurentPolynomial q_int_lp(std::int64_t a) { return LaurentPolynomial(IntPolynomial::q_integer(a)); }

// Level matrix of the q-deformed regular continued fraction at an odd
// (1-based) position: x -> [a]_q + q^{a}/x, and at an even position:
// x -> [a]_{q^{-1}} + q^{-a}/x.
QMatrix regular_level(std::int64_t a, bool odd_position) {
  if (odd_position)
    return {q_int_lp(a), LaurentPolynomial::q_power(static_cast<int>(a)),
            LaurentPolynomial(IntPolynomial::one()), LaurentPolynomial()};
  return {LaurentPolynomial(IntPolynomial::q_integer(a), static_cast<int>(1 - a)),
          LaurentPolynomial::q_power(static_cast<int>(-a)),
          LaurentPolynomial(IntPolynomial::one()), LaurentPolynomial()};
}

// Level matrix of the q-deformed Hirzebruch-Jung continued fraction:
// x -> [c]_q - q^{c-1}/x.
QMatrix hj_level(std::int64_t c) {
  return {q_int_lp(c), LaurentPolynomial(-IntPolynomial::one(), static_cast<int>(c - 1)),
          LaurentPolynomial(IntPolynomial::one()), LaurentPolynomial()};
}

struct LaurentTriple {
  LaurentPolynomial a, b, c;
};

}  // namespace

IntPolynomial FunctionalEquation::discriminant() const { return b * b - mpz_class(4) * (a * c); }

FunctionalEquation functional_equation(const ContinuedFraction& cf) {
  cf.validate();
  if (cf.finite())
    raise(errc::invalid_argument, "functional equation requires a periodic expansion");

  QMatrix prefix_m = QMatrix::identity();
  QMatrix period_m = QMatrix::identity();
  if (cf.kind == CFKind::HJ) {
    for (std::int64_t c : cf.prefix) prefix_m = prefix_m * hj_level(c);
    for (std::int64_t c : cf.period) period_m = period_m * hj_level(c);
  } else {
    std::vector<std::int64_t> pre = cf.prefix, per = cf.period;
    if (per.size() % 2 != 0) per.insert(per.end(), per.begin(), per.end());
    if (pre.size() % 2 != 0) {
      pre.push_back(per.front());
      std::rotate(per.begin(), per.begin() + 1, per.end());
    }
    for (std::size_t i = 0; i < pre.size(); ++i)
      prefix_m = prefix_m * regular_level(pre[i], i % 2 == 0);
    // The period now starts at an odd 1-based position of the full word.
    for (std::size_t i = 0; i < per.size(); ++i)
      period_m = period_m * regular_level(per[i], i % 2 == 0);
  }

  // Fixed point Y of the period map: c Y^2 + (d - a) Y - b = 0.
  LaurentTriple fix{period_m.c, period_m.d - period_m.a, -period_m.b};
  // X = prefix(Y) means Y = (d X - b)/(-c X + a) with the prefix entries.
  const LaurentPolynomial &pa = prefix_m.a, &pb = prefix_m.b, &pc = prefix_m.c,
                          &pd = prefix_m.d;
  LaurentPolynomial A = fix.a * pd * pd - fix.b * pd * pc + fix.c * pc * pc;
  LaurentPolynomial B = LaurentPolynomial(IntPolynomial{-2}) * fix.a * pb * pd +
                        fix.b * (pa * pd + pb * pc) +
                        LaurentPolynomial(IntPolynomial{-2}) * fix.c * pa * pc;
  LaurentPolynomial C = fix.a * pb * pb - fix.b * pa * pb + fix.c * pa * pa;

  // Clear q powers and common factors down to integer polynomials.
  int m = 0;
  bool any = false;
  for (const auto* t : {&A, &B, &C}) {
    if (t->is_zero()) continue;
    m = any ? std::min(m, t->low()) : t->low();
    any = true;
  }
  if (!any || A.is_zero())
    raise(errc::degenerate_quadratic, "period map has a rational fixed point");
  auto lift = [m](const LaurentPolynomial& t) {
    if (t.is_zero()) return IntPolynomial();
    return t.poly().shifted(t.low() - m);
  };
  IntPolynomial ia = lift(A), ib = lift(B), ic = lift(C);
  IntPolynomial g = IntPolynomial::gcd(IntPolynomial::gcd(ia, ib), ic);
  if (!(g == IntPolynomial::one())) {
    ia = *ia.divided_exactly_by(g);
    ib = *ib.divided_exactly_by(g);
    ic = *ic.divided_exactly_by(g);
  }
  if (ia.coeff(ia.valuation()) < 0) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return {std::move(ia), std::move(ib), std::move(ic)};
}

TruncatedLaurentSeries quadratic_apply(const FunctionalEquation& eq,
                                       const TruncatedLaurentSeries& x) {
  LaurentPolynomial a(eq.a), b(eq.b), c(eq.c);
  TruncatedLaurentSeries x2 = x * x;
  TruncatedLaurentSeries constant_term =
      c * TruncatedLaurentSeries::constant(1, x.order());
  return a * x2 + (b * x + constant_term);
}

}  // namespace qnum
