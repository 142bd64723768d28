#include "qnum/int_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "qnum/errors.hpp"

namespace qnum {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(mpz_class c, int exponent) {
  if (c == 0) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(exponent) + 1, mpz_class(0));
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_integer(long n) {
  if (n < 0) raise(errc::invalid_argument, "q_integer: negative index");
  if (n > 1000000) raise(errc::invalid_argument, "q_integer: index too large to materialize");
  return IntPolynomial(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

IntPolynomial IntPolynomial::gauss_binomial_4_2() { return IntPolynomial{1, 1, 2, 1, 1}; }

const mpz_class& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

int IntPolynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> prod(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(prod));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  if (c == 0) return {};
  IntPolynomial r(p);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) raise(errc::invalid_argument, "shifted: negative exponent");
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(static_cast<std::size_t>(k), mpz_class(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::unshifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) raise(errc::invalid_argument, "unshifted: q^k does not divide polynomial");
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + k, coeffs_.end()));
}

IntPolynomial IntPolynomial::mirror(int weight) const {
  if (is_zero()) return {};
  if (weight < degree()) raise(errc::invalid_argument, "mirror: weight below degree");
  std::vector<mpz_class> v(static_cast<std::size_t>(weight) + 1, mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[static_cast<std::size_t>(weight) - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = mpz_class(i) * coeffs_[i];
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
    acc.canonicalize();
  }
  return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + strtold(it->get_str().c_str(), nullptr);
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  mpz_class c = content();
  if (c == 0 || c == 1) return *this;
  IntPolynomial r(*this);
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<IntPolynomial> IntPolynomial::divided_exactly_by(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) raise(errc::zero_denominator, "division by zero polynomial");
  if (is_zero()) return IntPolynomial{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1, mpz_class(0));
  const mpz_class& lead = divisor.leading();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k) + divisor.coeffs_.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[static_cast<std::size_t>(k) + j] -= q * divisor.coeffs_[j];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::optional<IntPolynomial> IntPolynomial::sqrt_exact() const {
  if (is_zero()) return IntPolynomial{};
  if (degree() % 2 != 0 || leading() < 0) return std::nullopt;
  const int d = degree() / 2;
  mpz_class lead_root;
  if (!mpz_perfect_square_p(leading().get_mpz_t())) return std::nullopt;
  mpz_sqrt(lead_root.get_mpz_t(), leading().get_mpz_t());
  std::vector<mpz_class> s(static_cast<std::size_t>(d) + 1, mpz_class(0));
  s[static_cast<std::size_t>(d)] = lead_root;
  const mpz_class two_lead = 2 * lead_root;
  for (int k = d - 1; k >= 0; --k) {
    // coefficient of q^{d+k} in s^2 must match; solve for s_k
    mpz_class acc = coeff(d + k);
    for (int i = k + 1; i <= d - 1; ++i) {
      int j = d + k - i;
      if (j > d || j <= k) continue;
      acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(s[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
  }
  IntPolynomial candidate(std::move(s));
  if (candidate * candidate == *this) return candidate;
  IntPolynomial neg = -candidate;
  if (neg * neg == *this) return candidate;
  return std::nullopt;
}

namespace {

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, computed in Z[q].
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    IntPolynomial t = IntPolynomial::monomial(a.leading(), shift) * b;
    a = b.leading() * a - t;
  }
  return a;
}

}  // namespace

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero()) return {};
  mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_zero() || b.is_zero()) {
    IntPolynomial g = a.is_zero() ? b.primitive_part() : a.primitive_part();
    if (g.leading() < 0) g = -g;
    return cg * g;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return cg * a;
}

IntPolynomial IntPolynomial::squarefree_part() const {
  if (is_zero()) return {};
  IntPolynomial g = gcd(*this, derivative());
  IntPolynomial r = divided_exactly_by(g).value_or(primitive_part()).primitive_part();
  if (r.leading() < 0) r = -r;
  return r;
}

std::string IntPolynomial::text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c >= 0)
      os << " + " << c.get_str();
    else
      os << " - " << mpz_class(-c).get_str();
    os << "*q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string IntPolynomial::display() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

EvalResult poly_eval_complex(const IntPolynomial& p, std::complex<double> z) {
  const double az = std::abs(z);
  std::complex<double> acc = 0.0;
  double bound = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * z + it->get_d();
    bound = bound * az + std::abs(it->get_d());
  }
  const double eps = 2.220446049250313e-16;
  const double n = 2.0 * static_cast<double>(p.degree() < 0 ? 0 : p.degree()) + 1.0;
  return {acc, n * eps * bound};
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::not_coprime: return "NotCoprime";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::malformed_expansion: return "MalformedExpansion";
    case errc::truncation_beyond_finite: return "TruncationBeyondFinite";
    case errc::stabilization_not_reached: return "StabilizationNotReached";
    case errc::degenerate_quadratic: return "DegenerateQuadratic";
    case errc::non_convergence: return "NonConvergence";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::insufficient_coefficients: return "InsufficientCoefficients";
    case errc::parse_error: return "ParseError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace qnum
