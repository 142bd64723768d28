#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qnum/int_polynomial.hpp"

namespace qnum {

struct RootSet {
  struct Root {
    std::complex<double> value;
    double residual;   // |p(value)| relative to the coefficient scale at value
    int multiplicity;  // cluster size; 1 for simple roots
  };
  std::vector<Root> roots;  // one entry per root, multiplicity included
  int degree = 0;
  double tol = 0.0;

  double min_modulus() const;
  double max_modulus() const;
  std::string csv() const;  // re,im,modulus rows
};

/// Residual tolerance default; overridable through the QNUM_PRECISION
/// environment variable.
double default_root_tolerance();

/// All complex roots of p: companion-matrix eigenvalues as initial guesses,
/// Aberth-Ehrlich simultaneous iteration to the residual tolerance (relative
/// to the coefficient scale at each root), Newton-polished eigenvalues as the
/// fallback. Raises NonConvergence when residuals cannot be met.
RootSet find_roots(const IntPolynomial& p, double tol = default_root_tolerance());

/// Newton-polish one root of p in extended precision.
std::complex<long double> polish_root(const IntPolynomial& p, std::complex<long double> z,
                                      int iterations = 40);

/// Minimum of |p| over `samples` equispaced points of the circle |q| = radius.
/// Even sample counts place a point at the negative real axis, where the
/// families' minima sit.
double circle_min_abs(const IntPolynomial& p, double radius, int samples);

}  // namespace qnum
