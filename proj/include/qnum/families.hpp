#pragma once

#include <atomic>
#include <cstddef>
#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "qnum/int_polynomial.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

enum class Family { Fibonacci, FibonacciTilde, Pell, PellTilde };

const char* family_name(Family f) noexcept;
/// Parses "fib"/"fibonacci"/"pell" (+ optional "-tilde" suffix).
Family family_parse(const std::string& name, bool tilde);

/// Append-only cache of one polynomial family. Growth happens under a lock;
/// reads of already-published indices are unsynchronized (deque storage keeps
/// references stable, the published size is released after the entries).
class PolyFamily {
public:
  explicit PolyFamily(Family name);

  Family name() const { return name_; }
  const IntPolynomial& at(std::size_t n);

  static PolyFamily& shared(Family name);

private:
  void extend_locked(std::size_t n);
  Family name_;
  std::deque<IntPolynomial> cache_;
  std::atomic<std::size_t> published_;
  std::mutex grow_;
};

IntPolynomial fibonacci_poly(std::size_t n);
IntPolynomial fibonacci_tilde_poly(std::size_t n);
IntPolynomial pell_poly(std::size_t n);
IntPolynomial pell_tilde_poly(std::size_t n);
IntPolynomial family_poly(Family f, std::size_t n);

/// The q-deformed quotient of consecutive classical values: tilde(n+1)/plain(n).
/// `f` is the plain family (Fibonacci or Pell).
RationalFunction family_quotient(Family f, std::size_t n);

/// Classical integer value (the polynomial at q=1).
mpz_class family_number(Family f, std::size_t n);

/// Coefficient rows, lowest degree first. Rows start at the first index whose
/// polynomial is the constant 1 (Fibonacci: n=2, Pell: n=1), matching the
/// standard triangle displays.
std::vector<std::vector<mpz_class>> triangle_rows(Family f, std::size_t count);

/// First row index of the triangle for a family.
std::size_t triangle_start(Family f);

std::string triangle_csv(Family f, std::size_t count);
/// OEIS-style flat list (rows concatenated, space separated).
std::string triangle_flat(Family f, std::size_t count);

}  // namespace qnum
