#include "qnum.h"

#include <cstring>
#include <string>

#include "qnum/analysis.hpp"
#include "qnum/errors.hpp"
#include "qnum/families.hpp"
#include "qnum/json_io.hpp"
#include "qnum/qdeform.hpp"
#include "qnum/qseries.hpp"
#include "qnum/verify.hpp"

struct qnum_poly {
  qnum::IntPolynomial value;
};
struct qnum_ratfunc {
  qnum::RationalFunction value;
};
struct qnum_series {
  qnum::TruncatedLaurentSeries value;
  std::string cf_text;  // provenance for JSON output, may be empty
  int stabilized_upto = 0;
};
struct qnum_cf {
  qnum::ContinuedFraction value;
};

namespace {

thread_local std::string g_last_error;

qnum_status status_of(qnum::errc code) {
  using qnum::errc;
  switch (code) {
    case errc::invalid_argument: return QNUM_ERR_INVALID_ARGUMENT;
    case errc::not_coprime: return QNUM_ERR_NOT_COPRIME;
    case errc::zero_denominator: return QNUM_ERR_ZERO_DENOMINATOR;
    case errc::zero_inverse: return QNUM_ERR_ZERO_INVERSE;
    case errc::malformed_expansion: return QNUM_ERR_MALFORMED_EXPANSION;
    case errc::truncation_beyond_finite: return QNUM_ERR_TRUNCATION_BEYOND_FINITE;
    case errc::stabilization_not_reached: return QNUM_ERR_STABILIZATION_NOT_REACHED;
    case errc::degenerate_quadratic: return QNUM_ERR_DEGENERATE_QUADRATIC;
    case errc::non_convergence: return QNUM_ERR_NON_CONVERGENCE;
    case errc::denominator_vanishes: return QNUM_ERR_DENOMINATOR_VANISHES;
    case errc::insufficient_coefficients: return QNUM_ERR_INSUFFICIENT_COEFFICIENTS;
    case errc::parse_error: return QNUM_ERR_PARSE;
    case errc::internal_error: return QNUM_ERR_INTERNAL;
  }
  return QNUM_ERR_INTERNAL;
}

template <typename Fn>
qnum_status guarded(Fn&& fn) {
  try {
    fn();
    return QNUM_OK;
  } catch (const qnum::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QNUM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QNUM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qnum_status require(bool cond, const char* message) {
  if (cond) return QNUM_OK;
  g_last_error = message;
  return QNUM_ERR_INVALID_ARGUMENT;
}

qnum::Family parse_family(const char* family, int tilde) {
  return qnum::family_parse(family ? family : "", tilde != 0);
}

}  // namespace

extern "C" {

const char* qnum_version(void) { return "1.0.0"; }

const char* qnum_status_name(qnum_status status) {
  switch (status) {
    case QNUM_OK: return "OK";
    case QNUM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case QNUM_ERR_NOT_COPRIME: return "NotCoprime";
    case QNUM_ERR_ZERO_DENOMINATOR: return "ZeroDenominator";
    case QNUM_ERR_ZERO_INVERSE: return "ZeroInverse";
    case QNUM_ERR_MALFORMED_EXPANSION: return "MalformedExpansion";
    case QNUM_ERR_TRUNCATION_BEYOND_FINITE: return "TruncationBeyondFinite";
    case QNUM_ERR_STABILIZATION_NOT_REACHED: return "StabilizationNotReached";
    case QNUM_ERR_DEGENERATE_QUADRATIC: return "DegenerateQuadratic";
    case QNUM_ERR_NON_CONVERGENCE: return "NonConvergence";
    case QNUM_ERR_DENOMINATOR_VANISHES: return "DenominatorVanishes";
    case QNUM_ERR_INSUFFICIENT_COEFFICIENTS: return "InsufficientCoefficients";
    case QNUM_ERR_PARSE: return "ParseError";
    case QNUM_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* qnum_last_error(void) { return g_last_error.c_str(); }

void qnum_string_free(char* s) { delete[] s; }
void qnum_poly_free(qnum_poly* p) { delete p; }
void qnum_ratfunc_free(qnum_ratfunc* f) { delete f; }
void qnum_series_free(qnum_series* s) { delete s; }
void qnum_cf_free(qnum_cf* cf) { delete cf; }

qnum_status qnum_cf_parse(const char* text, qnum_cf** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new qnum_cf{qnum::ContinuedFraction::parse(text)}; });
}

qnum_status qnum_cf_format(const qnum_cf* cf, char** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(cf->value.text()); });
}

qnum_status qnum_cf_json(const qnum_cf* cf, char** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(qnum::to_json(cf->value).dump()); });
}

qnum_status qnum_cf_expand(int64_t r, int64_t s, int hj, qnum_cf** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new qnum_cf{hj ? qnum::hj_cf_expand(r, s) : qnum::regular_cf_expand(r, s)};
  });
}

qnum_status qnum_cf_convert(const qnum_cf* cf, int to_hj, qnum_cf** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    if (to_hj) {
      *out = new qnum_cf{cf->value.kind == qnum::CFKind::HJ ? cf->value
                                                            : qnum::regular_to_hj(cf->value)};
    } else {
      *out = new qnum_cf{cf->value.kind == qnum::CFKind::Regular
                             ? cf->value
                             : qnum::hj_to_regular(cf->value)};
    }
  });
}

qnum_status qnum_cf_convergents_json(const qnum_cf* cf, int n, char** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [r, s] : qnum::convergents(cf->value, n))
      arr.push_back({{"r", r.get_str()}, {"s", s.get_str()}});
    *out = dup_string(arr.dump());
  });
}

qnum_status qnum_qrat(int64_t r, int64_t s, qnum_ratfunc** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new qnum_ratfunc{qnum::q_rational_recursive(r, s).value};
  });
}

qnum_status qnum_qrat_eval_cf(const qnum_cf* cf, qnum_ratfunc** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    *out = new qnum_ratfunc{cf->value.kind == qnum::CFKind::Regular
                                ? qnum::q_cf_regular_eval(cf->value).value
                                : qnum::q_cf_hj_eval(cf->value).value};
  });
}

qnum_status qnum_ratfunc_display(const qnum_ratfunc* f, char** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(f->value.display()); });
}

qnum_status qnum_ratfunc_json(const qnum_ratfunc* f, char** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(qnum::to_json(f->value).dump()); });
}

qnum_status qnum_series_from_cf(const qnum_cf* cf, int order, qnum_series** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    qnum::QRealSeries s = qnum::q_real_series(cf->value, order);
    *out = new qnum_series{s.series, s.cf.text(), s.stabilized_upto};
  });
}

qnum_status qnum_series_from_fraction(int64_t r, int64_t s, int order, qnum_series** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    qnum::QRational qr = qnum::q_rational_recursive(r, s);
    *out = new qnum_series{qnum::taylor_expand(qr.value, order),
                           std::to_string(r) + "/" + std::to_string(s), 0};
  });
}

qnum_status qnum_series_display(const qnum_series* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(s->value.display()); });
}

qnum_status qnum_series_json(const qnum_series* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    nlohmann::json j = qnum::to_json(s->value);
    j["cf"] = s->cf_text;
    j["stabilized_upto"] = s->stabilized_upto;
    *out = dup_string(j.dump());
  });
}

qnum_status qnum_series_bfile(const qnum_series* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(s->value.bfile()); });
}

qnum_status qnum_functional_equation_json(const qnum_cf* cf, char** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(qnum::to_json(qnum::functional_equation(cf->value)).dump());
  });
}

qnum_status qnum_family_poly(const char* family, int n, int tilde, qnum_poly** out) {
  if (auto st = require(family && out && n >= 0, "bad family arguments")) return st;
  return guarded([&] {
    *out = new qnum_poly{qnum::family_poly(parse_family(family, tilde),
                                           static_cast<std::size_t>(n))};
  });
}

qnum_status qnum_family_quotient(const char* family, int n, qnum_ratfunc** out) {
  if (auto st = require(family && out && n >= 1, "bad family arguments")) return st;
  return guarded([&] {
    *out = new qnum_ratfunc{qnum::family_quotient(parse_family(family, 0),
                                                  static_cast<std::size_t>(n))};
  });
}

qnum_status qnum_family_triangle(const char* family, int rows, int tilde, int csv, char** out) {
  if (auto st = require(family && out && rows >= 1, "bad family arguments")) return st;
  return guarded([&] {
    qnum::Family f = parse_family(family, tilde);
    *out = dup_string(csv ? qnum::triangle_csv(f, static_cast<std::size_t>(rows))
                          : qnum::triangle_flat(f, static_cast<std::size_t>(rows)));
  });
}

qnum_status qnum_poly_display(const qnum_poly* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->value.display()); });
}

qnum_status qnum_poly_text(const qnum_poly* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->value.text()); });
}

qnum_status qnum_poly_json(const qnum_poly* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(qnum::to_json(p->value).dump()); });
}

qnum_status qnum_poly_roots_json(const qnum_poly* p, double tol, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] {
    double t = tol > 0 ? tol : qnum::default_root_tolerance();
    *out = dup_string(qnum::to_json(qnum::find_roots(p->value, t)).dump());
  });
}

qnum_status qnum_poly_roots_csv(const qnum_poly* p, double tol, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] {
    double t = tol > 0 ? tol : qnum::default_root_tolerance();
    *out = dup_string(qnum::find_roots(p->value, t).csv());
  });
}

qnum_status qnum_annulus_json(const char* family, int n_max, char** out) {
  if (auto st = require(family && out && n_max >= 2, "bad annulus arguments")) return st;
  return guarded([&] {
    qnum::Family f = parse_family(family, 0);
    double inner = f == qnum::Family::Pell ? qnum::silver_radius() : qnum::golden_radius();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep :
         qnum::annulus_check(f, static_cast<std::size_t>(n_max), inner, 1.0 / inner))
      arr.push_back(qnum::to_json(rep));
    *out = dup_string(arr.dump());
  });
}

qnum_status qnum_radius_exact_json(const qnum_cf* cf, char** out) {
  if (auto st = require(cf && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(qnum::to_json(qnum::radius_exact(cf->value)).dump());
  });
}

qnum_status qnum_radius_numeric_json(const qnum_cf* cf, int depth, char** out) {
  if (auto st = require(cf && out && depth >= 16, "need at least 16 coefficients")) return st;
  return guarded([&] {
    qnum::TruncatedLaurentSeries series = [&] {
      if (!cf->value.finite()) return qnum::q_real_series(cf->value, depth).series;
      mpq_class v = cf->value.value_exact();
      return qnum::taylor_expand(qnum::q_rational_recursive(v.get_num(), v.get_den()).value,
                                 depth);
    }();
    *out = dup_string(qnum::to_json(qnum::radius_numeric(series)).dump());
  });
}

qnum_status qnum_genthm_json(const qnum_cf* cf, int depth, char** out) {
  if (auto st = require(cf && out && depth >= 2, "bad depth")) return st;
  return guarded([&] {
    *out = dup_string(
        qnum::to_json(qnum::genthm_check(cf->value, static_cast<std::size_t>(depth))).dump());
  });
}

qnum_status qnum_scan_json(int samples, uint64_t seed, int threads, char** out) {
  if (auto st = require(out && samples >= 1, "bad scan arguments")) return st;
  return guarded([&] {
    qnum::ScanConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.threads = threads;
    *out = dup_string(qnum::to_json(qnum::conjecture_scan(cfg)).dump());
  });
}

qnum_status qnum_verify_paper(char** report, int* all_pass) {
  if (auto st = require(report && all_pass, "null argument")) return st;
  return guarded([&] {
    auto results = qnum::run_paper_suite();
    *report = dup_string(qnum::format_results(results));
    *all_pass = qnum::all_pass(results) ? 1 : 0;
  });
}

}  // extern "C"
