#include "qnum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qnum/errors.hpp"

namespace qnum {

double RootSet::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) m = std::min(m, std::abs(r.value));
  return m;
}

double RootSet::max_modulus() const {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(r.value));
  return m;
}

std::string RootSet::csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "re,im,modulus\n";
  for (const auto& r : roots)
    os << r.value.real() << "," << r.value.imag() << "," << std::abs(r.value) << "\n";
  return os.str();
}

double default_root_tolerance() {
  if (const char* env = std::getenv("QNUM_PRECISION")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && v < 1) return v;
  }
  return 1e-12;
}

namespace {

using cdouble = std::complex<double>;

// Normalized double coefficients (divided by the largest magnitude).
std::vector<double> scaled_coeffs(const IntPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  double maxmag = 0.0;
  for (const auto& z : p.coeffs()) maxmag = std::max(maxmag, std::abs(z.get_d()));
  if (maxmag == 0.0) maxmag = 1.0;
  for (const auto& z : p.coeffs()) c.push_back(z.get_d() / maxmag);
  return c;
}

cdouble horner(const std::vector<double>& c, cdouble z) {
  cdouble acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cdouble horner_derivative(const std::vector<double>& c, cdouble z) {
  cdouble acc = 0.0;
  for (std::size_t i = c.size(); i-- > 1;)
    acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

// Coefficient scale at z: sum |c_k| |z|^k (backward-error yardstick).
double coeff_scale(const std::vector<double>& c, double az) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * az + std::abs(*it);
  return acc;
}

std::vector<cdouble> companion_eigenvalues(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  const double lead = c.back();
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[static_cast<std::size_t>(i)] / lead;
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<cdouble> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

bool residuals_met(const std::vector<double>& c, const std::vector<cdouble>& z, double tol) {
  for (cdouble zi : z) {
    double scale = coeff_scale(c, std::abs(zi));
    if (std::abs(horner(c, zi)) > tol * scale) return false;
  }
  return true;
}

// Aberth-Ehrlich simultaneous correction sweep; returns max |step|.
double aberth_sweep(const std::vector<double>& c, std::vector<cdouble>& z) {
  double worst = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    cdouble p = horner(c, z[i]);
    cdouble dp = horner_derivative(c, z[i]);
    if (p == cdouble(0.0)) continue;
    cdouble newton = (dp != cdouble(0.0)) ? p / dp : cdouble(1e-3, 1e-3);
    cdouble repulsion = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      cdouble diff = z[i] - z[j];
      if (std::abs(diff) < 1e-300) diff = cdouble(1e-12, 1e-12);
      repulsion += 1.0 / diff;
    }
    cdouble denom = 1.0 - newton * repulsion;
    cdouble step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
    z[i] -= step;
    worst = std::max(worst, std::abs(step));
  }
  return worst;
}

void newton_polish(const std::vector<double>& c, std::vector<cdouble>& z, int iterations) {
  for (auto& zi : z) {
    for (int it = 0; it < iterations; ++it) {
      cdouble p = horner(c, zi);
      cdouble dp = horner_derivative(c, zi);
      if (std::abs(dp) < 1e-300) break;
      cdouble step = p / dp;
      zi -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(zi))) break;
    }
  }
}

}  // namespace

RootSet find_roots(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) raise(errc::invalid_argument, "root finding needs degree >= 1");
  RootSet out;
  out.degree = p.degree();
  out.tol = tol;

  // Pull out the q^v factor: v exact roots at the origin.
  const int v = p.valuation();
  IntPolynomial body = p.unshifted(v);
  for (int i = 0; i < v; ++i) out.roots.push_back({cdouble(0.0, 0.0), 0.0, 1});
  if (body.degree() < 1) {
    if (v > 1)
      for (auto& r : out.roots) r.multiplicity = v;
    return out;
  }

  std::vector<double> c = scaled_coeffs(body);
  std::vector<cdouble> z = companion_eigenvalues(c);

  bool converged = false;
  for (int iter = 0; iter < 120; ++iter) {
    double step = aberth_sweep(c, z);
    if (step < 1e-15) {
      converged = true;
      break;
    }
    if (iter > 8 && residuals_met(c, z, tol)) {
      converged = true;
      break;
    }
  }
  if (!converged && !residuals_met(c, z, tol)) {
    // Fallback: polish the raw eigenvalues directly.
    z = companion_eigenvalues(c);
    newton_polish(c, z, 60);
    if (!residuals_met(c, z, tol))
      raise(errc::non_convergence, "root residuals above tolerance after 120 iterations");
  }
  newton_polish(c, z, 4);

  // Conjugate symmetry cleanup for real input: snap near-real roots.
  for (auto& zi : z)
    if (std::abs(zi.imag()) < 1e-12 * (1.0 + std::abs(zi.real()))) zi = cdouble(zi.real(), 0.0);

  for (cdouble zi : z) {
    EvalResult ev = poly_eval_complex(body, zi);
    double scale = coeff_scale(c, std::abs(zi));
    double maxmag = 0.0;
    for (const auto& coeff : body.coeffs()) maxmag = std::max(maxmag, std::abs(coeff.get_d()));
    // residual relative to the coefficient scale at the root
    out.roots.push_back({zi, std::abs(ev.value) / (scale * maxmag), 1});
  }

  // Multiplicity flags by clustering.
  const double cluster_eps = 1e-7;
  for (std::size_t i = v; i < out.roots.size(); ++i) {
    int count = 1;
    for (std::size_t j = v; j < out.roots.size(); ++j) {
      if (i == j) continue;
      double d = std::abs(out.roots[i].value - out.roots[j].value);
      if (d < cluster_eps * (1.0 + std::abs(out.roots[i].value))) ++count;
    }
    out.roots[i].multiplicity = count;
  }
  if (v > 1)
    for (int i = 0; i < v; ++i) out.roots[static_cast<std::size_t>(i)].multiplicity = v;
  return out;
}

std::complex<long double> polish_root(const IntPolynomial& p, std::complex<long double> z,
                                      int iterations) {
  IntPolynomial dp = p.derivative();
  for (int it = 0; it < iterations; ++it) {
    std::complex<long double> f = p.eval(z);
    std::complex<long double> df = dp.eval(z);
    if (std::abs(df) == 0.0L) break;
    std::complex<long double> step = f / df;
    z -= step;
    if (std::abs(step) < 1e-21L * (1.0L + std::abs(z))) break;
  }
  return z;
}

double circle_min_abs(const IntPolynomial& p, double radius, int samples) {
  if (samples < 4) raise(errc::invalid_argument, "need at least 4 circle samples");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / samples;
    cdouble q = std::polar(radius, theta);
    best = std::min(best, std::abs(p.eval(q)));
  }
  return best;
}

}  // namespace qnum
