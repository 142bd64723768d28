#include "qnum/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "qnum/errors.hpp"
#include "qnum/qdeform.hpp"

namespace qnum {

double golden_radius() { return (3.0 - std::sqrt(5.0)) / 2.0; }

double silver_radius() {
  return (1.0 + std::sqrt(2.0) - std::sqrt(2.0 * std::sqrt(2.0) - 1.0)) / 2.0;
}

const char* radius_method_name(RadiusMethod m) noexcept {
  switch (m) {
    case RadiusMethod::ExactDiscriminant: return "ExactDiscriminant";
    case RadiusMethod::NumericRatio: return "NumericRatio";
    case RadiusMethod::NumericRoot: return "NumericRoot";
  }
  return "unknown";
}

std::vector<AnnulusReport> annulus_check(Family family, std::size_t n_max, double inner,
                                         double outer, double tol) {
  std::vector<AnnulusReport> out;
  Family tilde = family == Family::Fibonacci ? Family::FibonacciTilde
               : family == Family::Pell      ? Family::PellTilde
                                             : family;
  for (Family f : {family, tilde}) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      const IntPolynomial p = family_poly(f, n);
      if (p.degree() < 1) continue;
      RootSet roots = find_roots(p, tol);
      AnnulusReport rep;
      rep.id = std::string(family_name(f)) + "-" + std::to_string(n);
      rep.min_modulus = roots.min_modulus();
      rep.max_modulus = roots.max_modulus();
      rep.inner_bound = inner;
      rep.outer_bound = outer;
      rep.pass = inner < rep.min_modulus && rep.max_modulus < outer;
      out.push_back(std::move(rep));
    }
    if (tilde == family) break;
  }
  return out;
}

int default_circle_samples() { return 4096; }

namespace {

// sum_k |c_k| r^k and the derivative analogue (Lipschitz data on |q|=r).
std::pair<double, double> abs_bounds(const IntPolynomial& p, double r) {
  double mag = 0.0, lip = 0.0;
  double rk = 1.0;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    double a = std::abs(c[k].get_d());
    mag += a * rk;
    if (k >= 1) lip += static_cast<double>(k) * a * (rk / r);
    rk *= r;
  }
  return {mag, lip};
}

// |p(z)| relative to the coefficient scale at z.
double relative_residual(const IntPolynomial& p, std::complex<double> z) {
  double scale = 0.0, az = std::abs(z), zk = 1.0;
  for (const auto& c : p.coeffs()) {
    scale += std::abs(c.get_d()) * zk;
    zk *= az;
  }
  if (scale == 0.0) scale = 1.0;
  return std::abs(p.eval(z)) / scale;
}

}  // namespace

RoucheReport rouche_margin_report(const IntPolynomial& dominant, const IntPolynomial& ratio_num,
                                  const IntPolynomial& ratio_den, int power, double radius,
                                  int samples) {
  if (samples < 8) raise(errc::invalid_argument, "need at least 8 circle samples");
  if (ratio_den.is_zero()) raise(errc::denominator_vanishes, "ratio denominator is zero");
  const double rp = std::pow(radius, power);
  double margin = std::numeric_limits<double>::infinity();
  double min_den = std::numeric_limits<double>::infinity();
  double max_num = 0.0, max_ratio = 0.0;
  const double den_floor = 1e-12 * abs_bounds(ratio_den, radius).first + 1e-300;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / samples;
    const std::complex<double> q = std::polar(radius, theta);
    const double dv = std::abs(dominant.eval(q));
    const double nv = std::abs(ratio_num.eval(q));
    const double dnv = std::abs(ratio_den.eval(q));
    if (dnv < den_floor)
      raise(errc::denominator_vanishes, "ratio denominator vanishes on the sampled circle");
    min_den = std::min(min_den, dnv);
    max_num = std::max(max_num, nv);
    max_ratio = std::max(max_ratio, nv / dnv);
    margin = std::min(margin, dv - rp * nv / dnv);
  }
  // Lipschitz slack: how much the sampled minimum can overshoot the true one
  // over half an arc step.
  auto [dom_mag, dom_lip] = abs_bounds(dominant, radius);
  auto [num_mag, num_lip] = abs_bounds(ratio_num, radius);
  auto [den_mag, den_lip] = abs_bounds(ratio_den, radius);
  (void)dom_mag;
  (void)num_mag;
  (void)den_mag;
  const double h = 2.0 * std::numbers::pi * radius / samples;
  double den_safe = min_den - den_lip * h / 2.0;
  double slack;
  if (den_safe <= 0) {
    slack = std::numeric_limits<double>::infinity();
  } else {
    const double ratio_lip = (num_lip * min_den + max_num * den_lip) / (den_safe * den_safe);
    slack = (dom_lip + rp * ratio_lip) * h / 2.0;
  }
  RoucheReport rep;
  rep.margin = margin;
  rep.safety_margin = margin - slack;
  rep.min_denominator = min_den;
  rep.samples = samples;
  return rep;
}

double rouche_margin(const IntPolynomial& dominant, const IntPolynomial& ratio_num,
                     const IntPolynomial& ratio_den, int power, double radius, int samples) {
  return rouche_margin_report(dominant, ratio_num, ratio_den, power, radius, samples).margin;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_abs(const mpz_class& z) {
  if (z == 0) return kNegInf;
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(d)) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace

NumericRadiusResult radius_numeric(const TruncatedLaurentSeries& series) {
  // Growth of the power-series tail: exponents >= 1.
  std::vector<std::pair<int, double>> terms;  // (exponent, log|coeff|)
  for (int e = std::max(series.low(), 1); e < series.order(); ++e) {
    const mpz_class& c = series.coeff(e);
    if (c != 0) terms.emplace_back(e, log_abs(c));
  }
  const int known = series.order() - std::max(series.low(), 0);
  if (known < 16 || terms.size() < 2)
    raise(errc::insufficient_coefficients,
          "radius estimation needs at least 16 known coefficients");

  const auto [k1, l1] = terms.back();
  const auto [k2, l2] = terms[terms.size() - 2];
  const double rho_ratio = std::exp((l1 - l2) / static_cast<double>(k1 - k2));
  const double rho_root = std::exp(l1 / static_cast<double>(k1));

  const int window = std::max(8, (k1 + 3) / 4);
  double rho_limsup = 0.0;
  for (const auto& [k, l] : terms)
    if (k > k1 - window) rho_limsup = std::max(rho_limsup, std::exp(l / static_cast<double>(k)));

  NumericRadiusResult res;
  res.ratio.method = RadiusMethod::NumericRatio;
  res.ratio.value = 1.0 / rho_ratio;
  res.ratio.coefficient_count = known;
  res.root.method = RadiusMethod::NumericRoot;
  res.root.value = 1.0 / rho_root;
  res.root.coefficient_count = known;
  res.limsup_rho = rho_limsup;
  res.radius = 1.0 / rho_limsup;
  res.uncertainty = std::abs(res.ratio.value - res.root.value);
  res.ratio.numeric_estimate = rho_ratio;
  res.root.numeric_estimate = rho_root;
  res.ratio.uncertainty = res.uncertainty;
  res.root.uncertainty = res.uncertainty;
  return res;
}

namespace {

using cdouble = std::complex<double>;

// Continue the square-root branch of disc along the ray 0 -> target, pinned
// at the start by the series values; returns the continued sqrt at target.
cdouble continue_sqrt_branch(const FunctionalEquation& eq, const IntPolynomial& disc,
                             const TruncatedLaurentSeries& series, cdouble target,
                             double safe_radius) {
  const double at = std::abs(target);
  const double r0 = std::min(0.5 * safe_radius, 0.5 * at);
  double t = r0 / at;
  cdouble q0 = target * t;
  // sign pinning: 2A*GF + B = sigma * sqrt(disc)
  cdouble w_target = 2.0 * eq.a.eval(q0) * series.eval(q0) + eq.b.eval(q0);
  cdouble w = std::sqrt(disc.eval(q0));
  if (std::abs(w - w_target) > std::abs(-w - w_target)) w = -w;
  const int steps = 600;
  for (int i = 1; i <= steps; ++i) {
    double ti = t + (1.0 - t) * static_cast<double>(i) / steps;
    cdouble wi = std::sqrt(disc.eval(target * ti));
    if (std::abs(wi - w) > std::abs(-wi - w)) wi = -wi;
    w = wi;
  }
  return w;
}

struct FactorExtraction {
  IntPolynomial factor;
  std::complex<long double> root;
};

// Smallest verified integer factor of `poly` containing `root`: conjugate
// units of the numeric root set are recombined, the candidate re-expanded,
// rounded, and checked by exact division.
FactorExtraction extract_factor(const IntPolynomial& poly, const RootSet& roots, cdouble root,
                                int degree_cap) {
  FactorExtraction best{poly, polish_root(poly, std::complex<long double>(root))};
  if (poly.degree() > degree_cap) return best;

  struct Unit {
    std::vector<cdouble> members;
    bool has_target = false;
  };
  std::vector<Unit> units;
  std::vector<bool> used(roots.roots.size(), false);
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    if (used[i]) continue;
    Unit u;
    cdouble z = roots.roots[i].value;
    u.members.push_back(z);
    used[i] = true;
    if (std::abs(z.imag()) > 1e-10) {
      // find the conjugate partner
      for (std::size_t j = i + 1; j < roots.roots.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(roots.roots[j].value - std::conj(z)) < 1e-6 * (1.0 + std::abs(z))) {
          u.members.push_back(roots.roots[j].value);
          used[j] = true;
          break;
        }
      }
    }
    for (cdouble m : u.members)
      if (std::abs(m - root) < 1e-8 * (1.0 + std::abs(root))) u.has_target = true;
    units.push_back(std::move(u));
  }
  std::size_t target_unit = units.size();
  for (std::size_t i = 0; i < units.size(); ++i)
    if (units[i].has_target) target_unit = i;
  if (target_unit == units.size()) return best;

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (i != target_unit) others.push_back(i);
  if (others.size() > 14) return best;

  int best_degree = poly.degree();
  for (std::size_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<long double> cand{1.0L};
    auto mul_linear = [&cand](long double re) {
      cand.push_back(0.0L);
      for (std::size_t k = cand.size() - 1; k >= 1; --k) cand[k] = cand[k - 1] - re * cand[k];
      cand[0] *= -re;
    };
    auto mul_quadratic = [&cand](long double s, long double p) {
      // multiply by x^2 - s x + p
      cand.insert(cand.begin(), 2, 0.0L);
      std::vector<long double> next(cand.size(), 0.0L);
      for (std::size_t k = 2; k < cand.size(); ++k) {
        next[k] += cand[k];
        next[k - 1] -= s * cand[k];
        next[k - 2] += p * cand[k];
      }
      cand = std::move(next);
    };
    auto apply_unit = [&](const Unit& u) {
      if (u.members.size() == 1 && std::abs(u.members[0].imag()) <= 1e-10) {
        mul_linear(static_cast<long double>(u.members[0].real()));
      } else if (u.members.size() == 2) {
        cdouble z = u.members[0];
        mul_quadratic(2.0L * static_cast<long double>(z.real()),
                      static_cast<long double>(std::norm(z)));
      } else {
        mul_linear(static_cast<long double>(u.members[0].real()));
      }
    };
    apply_unit(units[target_unit]);
    for (std::size_t b = 0; b < others.size(); ++b)
      if (mask & (1u << b)) apply_unit(units[others[b]]);
    const int deg = static_cast<int>(cand.size()) - 1;
    if (deg >= best_degree) continue;
    // scale by the leading coefficient and round
    long double lead = static_cast<long double>(poly.leading().get_d());
    std::vector<mpz_class> ic(cand.size());
    bool ok = true;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      long double scaled = cand[k] * lead;
      long double rounded = std::roundl(scaled);
      if (std::abs(scaled - rounded) > 0.01L * (1.0L + std::abs(rounded)) ||
          std::abs(rounded) > 9.0e15L) {
        ok = false;
        break;
      }
      ic[k] = mpz_class(static_cast<long>(rounded));
    }
    if (!ok) continue;
    IntPolynomial candidate = IntPolynomial(std::move(ic)).primitive_part();
    if (candidate.is_zero() || candidate.degree() != deg) continue;
    if (candidate.leading() < 0) candidate = -candidate;
    if (!poly.divided_exactly_by(candidate)) continue;
    best_degree = deg;
    best.factor = candidate;
  }
  best.root = polish_root(best.factor, std::complex<long double>(root));
  return best;
}

}  // namespace

RadiusReport radius_exact(const ContinuedFraction& cf, const RadiusExactOptions& opts) {
  FunctionalEquation eq = functional_equation(cf);
  IntPolynomial disc = eq.discriminant();
  if (disc.is_zero())
    raise(errc::degenerate_quadratic, "discriminant vanishes identically");
  IntPolynomial disc_sf = disc.squarefree_part();
  if (disc_sf.degree() < 1)
    raise(errc::degenerate_quadratic,
          "discriminant is a perfect square: the fixed point is rational");

  RootSet branch_roots = find_roots(disc_sf, opts.tol);
  double m_branch = branch_roots.min_modulus();

  QRealSeries qs = q_real_series(cf, opts.series_order);
  NumericRadiusResult est = radius_numeric(qs.series);
  auto window_ok = [&](double value) {
    return std::abs(value - est.radius) <= std::max(0.35 * est.radius, 0.02);
  };

  RadiusReport rep;
  rep.method = RadiusMethod::ExactDiscriminant;
  rep.coefficient_count = opts.series_order;
  rep.numeric_estimate = est.radius;
  rep.uncertainty = est.uncertainty;

  auto finish = [&](const IntPolynomial& host, const RootSet& host_roots, cdouble chosen,
                    bool checked) {
    FactorExtraction fx = opts.extract_factor
        ? extract_factor(host, host_roots, chosen, opts.factor_degree_cap)
        : FactorExtraction{host, polish_root(host, std::complex<long double>(chosen))};
    rep.value = static_cast<double>(std::abs(fx.root));
    cdouble croot(static_cast<double>(fx.root.real()), static_cast<double>(fx.root.imag()));
    rep.certificate = RadiusCertificate{fx.factor, croot, relative_residual(fx.factor, croot)};
    rep.certificate_degree = fx.factor.degree();
    rep.cross_check_ok = checked;
    return rep;
  };

  // Pole candidates strictly inside the branch-point radius, nearest first.
  if (eq.a.degree() >= 1) {
    RootSet a_roots = find_roots(eq.a, opts.tol);
    std::vector<cdouble> poles;
    for (const auto& r : a_roots.roots) {
      double m = std::abs(r.value);
      if (m > 1e-9 && m < m_branch * (1.0 - 1e-9)) poles.push_back(r.value);
    }
    std::sort(poles.begin(), poles.end(),
              [](cdouble a, cdouble b) { return std::abs(a) < std::abs(b); });
    for (cdouble pole : poles) {
      cdouble w = continue_sqrt_branch(eq, disc, qs.series, pole, est.radius);
      cdouble numerator = -eq.b.eval(pole) + w;
      double scale = std::abs(eq.b.eval(pole)) + std::abs(w) + 1.0;
      if (std::abs(numerator) <= 1e-6 * scale) continue;  // removable: branch cancels
      if (!window_ok(std::abs(pole))) continue;           // certification gate
      return finish(eq.a, a_roots, pole, true);
    }
  }

  // Branch point decides.
  cdouble chosen = branch_roots.roots.front().value;
  for (const auto& r : branch_roots.roots)
    if (std::abs(r.value) < std::abs(chosen)) chosen = r.value;
  return finish(disc_sf, branch_roots, chosen, window_ok(m_branch));
}

GenThmReport genthm_check(const ContinuedFraction& cf, std::size_t depth, double tol) {
  cf.validate();
  ContinuedFraction hj = cf.kind == CFKind::HJ ? cf : regular_to_hj(cf);
  GenThmReport rep;
  rep.inner_bound = golden_radius();
  rep.depth = hj.finite() ? std::min(depth, hj.prefix.size()) : depth;

  bool tail_ok = true;
  for (std::int64_t c : hj.period)
    if (c < 4) tail_ok = false;
  if (hj.finite() || tail_ok) {
    rep.guaranteed = true;
    std::size_t last_small = 0;
    for (std::size_t i = 0; i < hj.prefix.size(); ++i)
      if (hj.prefix[i] < 4) last_small = i + 1;
    rep.condition_start = last_small + 1;
  } else {
    rep.guaranteed = false;
    rep.condition_start = 0;
  }

  // Denominators of the HJ convergents: S_{k+1} = [c_{k+1}]_q S_k - q^{c_k-1} S_{k-1}.
  IntPolynomial s_prev2, s_prev = IntPolynomial::one();  // S_0 = 0, S_1 = 1
  double min_mod = std::numeric_limits<double>::infinity();
  std::size_t min_at = 0;
  std::int64_t c_prev = hj.at(1);
  for (std::size_t k = 2; k <= rep.depth; ++k) {
    IntPolynomial sk =
        IntPolynomial::q_integer(hj.at(k)) * s_prev - s_prev2.shifted(static_cast<int>(c_prev - 1));
    if (sk.degree() >= 1) {
      RootSet roots = find_roots(sk, tol);
      double m = roots.min_modulus();
      if (m < min_mod) {
        min_mod = m;
        min_at = k;
      }
    }
    s_prev2 = std::move(s_prev);
    s_prev = std::move(sk);
    c_prev = hj.at(k);
  }
  rep.min_root_modulus = min_mod;
  rep.min_at_depth = min_at;
  rep.empirical_pass = min_mod > rep.inner_bound;
  return rep;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

ScanSample scan_one(const ScanConfig& cfg, int index) {
  std::uint64_t state = splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  auto next = [&state]() {
    state = splitmix64(state);
    return state;
  };
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  ScanSample sample;
  const bool periodic = (next() % 5) != 0;  // 4 of 5 samples
  try {
    if (periodic) {
      ContinuedFraction cf;
      cf.kind = CFKind::Regular;
      std::size_t plen = static_cast<std::size_t>(uniform(1, cfg.max_period));
      std::size_t prelen = static_cast<std::size_t>(uniform(0, 2));
      for (std::size_t i = 0; i < prelen; ++i) cf.prefix.push_back(uniform(1, cfg.max_entry));
      for (std::size_t i = 0; i < plen; ++i) cf.period.push_back(uniform(1, cfg.max_entry));
      sample.cf_text = cf.text();
      RadiusExactOptions opts;
      opts.series_order = cfg.series_order;
      opts.extract_factor = true;
      RadiusReport rep = radius_exact(cf, opts);
      sample.method = rep.method;
      sample.radius = rep.value;
      sample.certified = rep.cross_check_ok;
      sample.certificate_degree = rep.certificate_degree;
      sample.violation = sample.certified && rep.value < golden_radius() - cfg.tolerance;
      sample.equality = sample.certified &&
                        std::abs(rep.value - golden_radius()) <= cfg.tolerance;
    } else {
      ContinuedFraction cf;
      cf.kind = CFKind::Regular;
      std::size_t len = static_cast<std::size_t>(uniform(10, 24));
      cf.prefix.push_back(uniform(1, 6));
      for (std::size_t i = 1; i < len; ++i) cf.prefix.push_back(uniform(1, 6));
      if (cf.prefix.size() % 2 != 0) cf.prefix.push_back(1);
      sample.cf_text = cf.text();
      mpq_class value = cf.value_exact();
      QRational qr = q_rational_recursive(value.get_num(), value.get_den());
      TruncatedLaurentSeries series = taylor_expand(qr.value, cfg.series_order);
      NumericRadiusResult est = radius_numeric(series);
      sample.method = RadiusMethod::NumericRoot;
      sample.radius = est.radius;
      sample.certified = false;
      sample.unconfirmed = est.radius < golden_radius() - cfg.tolerance;
    }
  } catch (const Error& e) {
    sample.error = std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    sample.error = e.what();
  }
  return sample;
}

}  // namespace

ScanReport conjecture_scan(const ScanConfig& config) {
  ScanReport report;
  report.config = config;
  report.samples.resize(static_cast<std::size_t>(config.samples));
  int workers = config.threads > 0
      ? config.threads
      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, config.samples > 0 ? config.samples : 1);

  auto run_range = [&](int start) {
    for (int i = start; i < config.samples; i += workers)
      report.samples[static_cast<std::size_t>(i)] = scan_one(config, i);
  };
  if (workers <= 1) {
    run_range(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
    for (auto& t : pool) t.join();
  }

  report.min_certified_radius = std::numeric_limits<double>::infinity();
  for (const auto& s : report.samples) {
    if (!s.error.empty()) {
      ++report.failures;
      continue;
    }
    if (s.certified && s.radius < report.min_certified_radius) {
      report.min_certified_radius = s.radius;
      report.min_certified_cf = s.cf_text;
    }
    if (s.violation) ++report.violations;
    if (s.unconfirmed) ++report.unconfirmed;
    if (s.equality) ++report.equality_cases;
  }
  if (!std::isfinite(report.min_certified_radius)) report.min_certified_radius = 0.0;
  return report;
}

}  // namespace qnum
