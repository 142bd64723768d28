#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnum/continued_fraction.hpp"
#include "qnum/families.hpp"
#include "qnum/int_polynomial.hpp"
#include "qnum/laurent.hpp"
#include "qnum/qseries.hpp"
#include "qnum/roots.hpp"

namespace qnum {

/// (3 - sqrt 5)/2: radius of convergence of the q-deformed golden ratio and
/// the conjectured universal lower bound.
double golden_radius();
/// Radius of convergence of the q-deformed silver ratio sqrt(2)+1.
double silver_radius();

struct AnnulusReport {
  std::string id;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  double inner_bound = 0.0;
  double outer_bound = 0.0;
  bool pass = false;  // inner < min <= max < outer
};

/// One report per polynomial of the family and its mirror family, indices up
/// to n_max (starting at the first index with positive degree).
std::vector<AnnulusReport> annulus_check(Family family, std::size_t n_max, double inner,
                                         double outer, double tol = default_root_tolerance());

struct RoucheReport {
  double margin = 0.0;        // min over samples of |dominant| - radius^power |num/den|
  double safety_margin = 0.0; // margin minus a Lipschitz bound on the sampling gap
  double min_denominator = 0.0;
  int samples = 0;
};

int default_circle_samples();

/// Sampled Rouche margin on the circle |q| = radius. Positive values are the
/// numeric evidence that `dominant` dominates radius^power * num/den there.
/// Raises DenominatorVanishes when den gets within the residual floor of 0.
double rouche_margin(const IntPolynomial& dominant, const IntPolynomial& ratio_num,
                     const IntPolynomial& ratio_den, int power, double radius, int samples);
RoucheReport rouche_margin_report(const IntPolynomial& dominant, const IntPolynomial& ratio_num,
                                  const IntPolynomial& ratio_den, int power, double radius,
                                  int samples);

enum class RadiusMethod { ExactDiscriminant, NumericRatio, NumericRoot };
const char* radius_method_name(RadiusMethod m) noexcept;

struct RadiusCertificate {
  IntPolynomial polynomial;       // smallest verified factor containing the root
  std::complex<double> chosen_root;
  double residual = 0.0;          // relative residual of the chosen root
};

struct RadiusReport {
  RadiusMethod method = RadiusMethod::ExactDiscriminant;
  double value = 0.0;
  std::optional<RadiusCertificate> certificate;
  int coefficient_count = 0;      // series coefficients consulted
  double numeric_estimate = 0.0;  // the estimator used for cross-checking
  double uncertainty = 0.0;       // spread between the two numeric estimators
  bool cross_check_ok = true;
  /// Degree of the certificate polynomial (0 when absent).
  int certificate_degree = 0;
};

struct NumericRadiusResult {
  RadiusReport ratio;   // deepest-coefficient ratio estimator
  RadiusReport root;    // deepest-coefficient n-th root estimator
  double limsup_rho = 0.0;  // tail-windowed max of |k_n|^{1/n}
  double radius = 0.0;      // 1 / limsup_rho
  double uncertainty = 0.0;
};

/// Ratio and n-th-root growth estimators on the series coefficients; needs at
/// least 16 known coefficients (InsufficientCoefficients otherwise).
NumericRadiusResult radius_numeric(const TruncatedLaurentSeries& series);

struct RadiusExactOptions {
  int series_order = 64;     // depth of the cross-check series
  int factor_degree_cap = 16;  // subset factor extraction ceiling
  bool extract_factor = true;
  double tol = 1e-12;
};

/// Exact radius of an eventually periodic continued fraction: smallest
/// singularity of the generating-function branch picked by the series.
/// Candidates are the roots of the square-free discriminant (branch points)
/// and the roots of the quadratic's leading coefficient (potential poles,
/// confirmed by branch continuation along the ray from the origin), each
/// cross-checked against the numeric estimator before certification.
RadiusReport radius_exact(const ContinuedFraction& cf, const RadiusExactOptions& opts = {});

struct GenThmReport {
  bool guaranteed = false;  // all HJ coefficients >= 4 from position N on
  std::size_t condition_start = 0;  // the N above (0 when not guaranteed)
  std::size_t depth = 0;            // denominators tested
  double min_root_modulus = 0.0;
  std::size_t min_at_depth = 0;
  double inner_bound = 0.0;  // golden radius
  bool empirical_pass = false;
};

/// Sufficient-condition checker for the lower-bound theorem on HJ expansions,
/// plus an empirical denominator root scan in |q| <= golden radius.
GenThmReport genthm_check(const ContinuedFraction& cf, std::size_t depth = 60,
                          double tol = default_root_tolerance());

struct ScanConfig {
  int samples = 1000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
  int series_order = 64;
  double tolerance = 1e-6;
  int max_period = 6;
  std::int64_t max_entry = 4;
};

struct ScanSample {
  std::string cf_text;
  RadiusMethod method = RadiusMethod::ExactDiscriminant;
  double radius = 0.0;
  bool certified = false;
  bool violation = false;    // certified radius below the bound
  bool unconfirmed = false;  // numeric-only estimate below the bound
  bool equality = false;     // certified radius within tolerance of the bound
  int certificate_degree = 0;
  std::string error;  // per-sample failure, logged not thrown
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanSample> samples;
  double min_certified_radius = 0.0;
  std::string min_certified_cf;
  int violations = 0;
  int unconfirmed = 0;
  int equality_cases = 0;
  int failures = 0;
};

/// Random search for counterexamples to the lower-bound conjecture
/// R(x) >= golden radius. Deterministic for a fixed seed regardless of the
/// worker count (per-sample seeding).
ScanReport conjecture_scan(const ScanConfig& config);

}  // namespace qnum
