#include "qnum/families.hpp"

#include <atomic>
#include <sstream>

#include "qnum/errors.hpp"

namespace qnum {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Fibonacci: return "fibonacci";
    case Family::FibonacciTilde: return "fibonacci-tilde";
    case Family::Pell: return "pell";
    case Family::PellTilde: return "pell-tilde";
  }
  return "unknown";
}

Family family_parse(const std::string& name, bool tilde) {
  if (name == "fib" || name == "fibonacci")
    return tilde ? Family::FibonacciTilde : Family::Fibonacci;
  if (name == "pell") return tilde ? Family::PellTilde : Family::Pell;
  raise(errc::invalid_argument, "unknown family: " + name);
}

PolyFamily::PolyFamily(Family name) : name_(name), published_(0) {}

namespace {

std::vector<IntPolynomial> family_seed(Family f) {
  switch (f) {
    case Family::Fibonacci:
      return {IntPolynomial::zero(), IntPolynomial::one(), IntPolynomial::one(),
              IntPolynomial{1, 1}};
    case Family::FibonacciTilde:
      return {IntPolynomial::zero(), IntPolynomial::one(), IntPolynomial::one(),
              IntPolynomial{1, 1}};
    case Family::Pell:
      return {IntPolynomial::zero(), IntPolynomial::one(), IntPolynomial{1, 1},
              IntPolynomial{1, 1, 2, 1}};
    case Family::PellTilde:
      return {IntPolynomial::zero(), IntPolynomial::one(), IntPolynomial{1, 1},
              IntPolynomial{1, 2, 1, 1}};
  }
  raise(errc::internal_error, "unreachable");
}

// One step of the interleaved two-term recurrences; n >= 4.
IntPolynomial family_step(Family f, std::size_t n, const IntPolynomial& p1,
                          const IntPolynomial& p2) {
  const bool odd = n % 2 == 1;
  switch (f) {
    case Family::Fibonacci:
      // F_{2l+1} = q F_{2l} + F_{2l-1};  F_{2l+2} = F_{2l+1} + q^2 F_{2l}
      return odd ? IntPolynomial{0, 1} * p1 + p2 : p1 + IntPolynomial{0, 0, 1} * p2;
    case Family::FibonacciTilde:
      // mirrored steps
      return odd ? p1 + IntPolynomial{0, 0, 1} * p2 : IntPolynomial{0, 1} * p1 + p2;
    case Family::Pell:
      // P_{2l+1} = (q+q^2) P_{2l} + P_{2l-1};  P_{2l+2} = (1+q) P_{2l+1} + q^4 P_{2l}
      return odd ? IntPolynomial{0, 1, 1} * p1 + p2
                 : IntPolynomial{1, 1} * p1 + IntPolynomial{0, 0, 0, 0, 1} * p2;
    case Family::PellTilde:
      return odd ? IntPolynomial{1, 1} * p1 + IntPolynomial{0, 0, 0, 0, 1} * p2
                 : IntPolynomial{0, 1, 1} * p1 + p2;
  }
  raise(errc::internal_error, "unreachable");
}

}  // namespace

void PolyFamily::extend_locked(std::size_t n) {
  if (cache_.empty()) {
    for (auto& p : family_seed(name_)) cache_.push_back(std::move(p));
  }
  while (cache_.size() <= n) {
    std::size_t k = cache_.size();
    cache_.push_back(family_step(name_, k, cache_[k - 1], cache_[k - 2]));
  }
  published_.store(cache_.size(), std::memory_order_release);
}

const IntPolynomial& PolyFamily::at(std::size_t n) {
  if (published_.load(std::memory_order_acquire) > n) return cache_[n];
  std::lock_guard<std::mutex> lock(grow_);
  if (cache_.size() <= n) extend_locked(n);
  if (published_.load(std::memory_order_relaxed) < cache_.size())
    published_.store(cache_.size(), std::memory_order_release);
  return cache_[n];
}

PolyFamily& PolyFamily::shared(Family name) {
  static PolyFamily fib(Family::Fibonacci);
  static PolyFamily fib_tilde(Family::FibonacciTilde);
  static PolyFamily pell(Family::Pell);
  static PolyFamily pell_tilde(Family::PellTilde);
  switch (name) {
    case Family::Fibonacci: return fib;
    case Family::FibonacciTilde: return fib_tilde;
    case Family::Pell: return pell;
    case Family::PellTilde: return pell_tilde;
  }
  raise(errc::internal_error, "unreachable");
}

IntPolynomial fibonacci_poly(std::size_t n) { return PolyFamily::shared(Family::Fibonacci).at(n); }
IntPolynomial fibonacci_tilde_poly(std::size_t n) {
  return PolyFamily::shared(Family::FibonacciTilde).at(n);
}
IntPolynomial pell_poly(std::size_t n) { return PolyFamily::shared(Family::Pell).at(n); }
IntPolynomial pell_tilde_poly(std::size_t n) {
  return PolyFamily::shared(Family::PellTilde).at(n);
}
IntPolynomial family_poly(Family f, std::size_t n) { return PolyFamily::shared(f).at(n); }

RationalFunction family_quotient(Family f, std::size_t n) {
  if (n < 1) raise(errc::invalid_argument, "family quotient needs n >= 1");
  switch (f) {
    case Family::Fibonacci:
      return {fibonacci_tilde_poly(n + 1), fibonacci_poly(n)};
    case Family::Pell:
      return {pell_tilde_poly(n + 1), pell_poly(n)};
    default:
      raise(errc::invalid_argument, "quotients are defined for the plain families");
  }
}

mpz_class family_number(Family f, std::size_t n) {
  return family_poly(f, n).eval(mpz_class(1));
}

std::size_t triangle_start(Family f) {
  return (f == Family::Pell || f == Family::PellTilde) ? 1 : 2;
}

std::vector<std::vector<mpz_class>> triangle_rows(Family f, std::size_t count) {
  if (count < 1) raise(errc::invalid_argument, "triangle needs at least one row");
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(count);
  const std::size_t start = triangle_start(f);
  for (std::size_t n = start; n < start + count; ++n) {
    rows.push_back(family_poly(f, n).coeffs());
    if (rows.back().empty()) rows.back().push_back(0);
  }
  return rows;
}

std::string triangle_csv(Family f, std::size_t count) {
  std::ostringstream os;
  for (const auto& row : triangle_rows(f, count)) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i].get_str();
    }
    os << "\n";
  }
  return os.str();
}

std::string triangle_flat(Family f, std::size_t count) {
  std::ostringstream os;
  bool first = true;
  for (const auto& row : triangle_rows(f, count))
    for (const auto& c : row) {
      if (!first) os << " ";
      os << c.get_str();
      first = false;
    }
  os << "\n";
  return os.str();
}

}  // namespace qnum
