#include "qnum/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qnum/errors.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

LaurentPolynomial::LaurentPolynomial(IntPolynomial poly, int low)
    : poly_(std::move(poly)), low_(low) {
  if (poly_.is_zero()) {
    low_ = 0;
    return;
  }
  int v = poly_.valuation();
  if (v > 0) {
    poly_ = poly_.unshifted(v);
    low_ += v;
  }
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int low = std::min(a.low_, b.low_);
  return {a.poly_.shifted(a.low_ - low) + b.poly_.shifted(b.low_ - low), low};
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return {a.poly_ * b.poly_, a.low_ + b.low_};
}

TruncatedLaurentSeries::TruncatedLaurentSeries(int low, std::vector<mpz_class> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {}

TruncatedLaurentSeries TruncatedLaurentSeries::constant(const mpz_class& c, int order) {
  if (order < 1) raise(errc::invalid_argument, "series order must be >= 1");
  std::vector<mpz_class> v(static_cast<std::size_t>(order), mpz_class(0));
  v[0] = c;
  return {0, std::move(v)};
}

const mpz_class& TruncatedLaurentSeries::coeff(int e) const {
  static const mpz_class zero = 0;
  if (e < low_) return zero;  // below the lowest stored exponent everything is zero
  if (e >= order()) raise(errc::invalid_argument, "series coefficient beyond known window");
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

bool TruncatedLaurentSeries::is_known_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

int TruncatedLaurentSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return low_ + static_cast<int>(i);
  return order();
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(int new_order) const {
  if (new_order > order()) raise(errc::invalid_argument, "cannot extend known window");
  if (new_order <= low_) return {low_, {}};
  return {low_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + (new_order - low_))};
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(int k) const {
  return {low_ + k, coeffs_};
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
  auto v = coeffs_;
  for (auto& c : v) c = -c;
  return {low_, std::move(v)};
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  int low = std::min(a.low_, b.low_);
  int ord = std::min(a.order(), b.order());
  if (ord <= low) return {low, {}};
  std::vector<mpz_class> v(static_cast<std::size_t>(ord - low), mpz_class(0));
  for (int e = low; e < ord; ++e)
    v[static_cast<std::size_t>(e - low)] = a.coeff(e) + b.coeff(e);
  return {low, std::move(v)};
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  return a + (-b);
}

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  // Product known for exponents below min(a.order + b.low, b.order + a.low):
  // the unknown tail of one factor meets at least q^low of the other.
  int low = a.low_ + b.low_;
  int ord = std::min(a.order() + b.low_, b.order() + a.low_);
  if (ord <= low) return {low, {}};
  std::vector<mpz_class> v(static_cast<std::size_t>(ord - low), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < v.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return {low, std::move(v)};
}

TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  int bv = b.first_nonzero();
  if (bv >= b.order()) raise(errc::zero_denominator, "series division by (known-)zero series");
  const mpz_class& lead = b.coeff(bv);
  // result low = a.low - bv; known below min(a.order - bv, b.order - 2bv + a.low)
  int low = a.low_ - bv;
  int ord = std::min(a.order() - bv, b.order() - bv + a.low_ - bv);
  if (ord <= low) return {low, {}};
  const std::size_t n = static_cast<std::size_t>(ord - low);
  std::vector<mpz_class> r(n, mpz_class(0));
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class acc = a.coeff(a.low_ + static_cast<int>(k));
    for (std::size_t j = 0; j < k; ++j) {
      int be = bv + static_cast<int>(k - j);
      if (be < b.order()) acc -= r[j] * b.coeff(be);
    }
    if (lead == 1) {
      r[k] = std::move(acc);
    } else if (lead == -1) {
      r[k] = -acc;
    } else {
      if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
        raise(errc::internal_error, "series division left the integer coefficient ring");
      mpz_divexact(r[k].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    }
  }
  return {low, std::move(r)};
}

TruncatedLaurentSeries operator*(const LaurentPolynomial& p, const TruncatedLaurentSeries& s) {
  if (p.is_zero()) {
    // A zero polynomial annihilates every coefficient the series knows about.
    return {s.low(), std::vector<mpz_class>(s.coeffs().size(), mpz_class(0))};
  }
  int low = p.low() + s.low();
  int ord = p.low() + s.order();
  std::vector<mpz_class> v(static_cast<std::size_t>(ord - low), mpz_class(0));
  const auto& pc = p.poly().coeffs();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i] == 0) continue;
    for (std::size_t j = 0; j < s.coeffs().size() && i + j < v.size(); ++j)
      v[i + j] += pc[i] * s.coeffs()[j];
  }
  return {low, std::move(v)};
}

TruncatedLaurentSeries operator+(const LaurentPolynomial& p, const TruncatedLaurentSeries& s) {
  if (p.is_zero()) return s;
  int low = std::min(p.low(), s.low());
  int ord = s.order();
  if (ord <= low) return {low, {}};
  std::vector<mpz_class> v(static_cast<std::size_t>(ord - low), mpz_class(0));
  for (int e = s.low(); e < ord; ++e) v[static_cast<std::size_t>(e - low)] = s.coeff(e);
  for (int e = p.low(); e <= p.high() && e < ord; ++e)
    v[static_cast<std::size_t>(e - low)] += p.poly().coeff(e - p.low());
  return {low, std::move(v)};
}

bool TruncatedLaurentSeries::agrees_with(const TruncatedLaurentSeries& rhs) const {
  int ord = std::min(order(), rhs.order());
  for (int e = std::min(low_, rhs.low_); e < ord; ++e)
    if (coeff(e) != rhs.coeff(e)) return false;
  return true;
}

std::complex<double> TruncatedLaurentSeries::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc * std::pow(z, low_);
}

std::string TruncatedLaurentSeries::display() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) return "0";
  return os.str();
}

std::string TruncatedLaurentSeries::bfile() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    os << (low_ + static_cast<int>(i)) << " " << coeffs_[i].get_str() << "\n";
  return os.str();
}

TruncatedLaurentSeries taylor_expand(const RationalFunction& f, int order) {
  if (order < 1) raise(errc::invalid_argument, "taylor_expand: order must be >= 1");
  if (f.is_zero()) return TruncatedLaurentSeries(0, std::vector<mpz_class>(order, mpz_class(0)));
  const int vn = f.num().valuation();
  const int vd = f.den().valuation();
  const int low = vn - vd;
  if (order <= low) return {low, {}};
  const std::size_t n = static_cast<std::size_t>(order - low);
  const IntPolynomial num = f.num().unshifted(vn);
  const IntPolynomial den = f.den().unshifted(vd);
  const mpz_class& lead = den.coeff(0);
  std::vector<mpz_class> r(n, mpz_class(0));
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class acc = num.coeff(static_cast<int>(k));
    for (std::size_t j = 0; j < k; ++j) {
      if (r[j] == 0) continue;
      acc -= r[j] * den.coeff(static_cast<int>(k - j));
    }
    if (lead == 1) {
      r[k] = std::move(acc);
    } else if (lead == -1) {
      r[k] = -acc;
    } else {
      if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
        raise(errc::internal_error, "taylor_expand: non-integer series coefficient");
      mpz_divexact(r[k].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    }
  }
  return {low, std::move(r)};
}

}  // namespace qnum
