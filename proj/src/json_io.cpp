#include "qnum/json_io.hpp"

namespace qnum {

using nlohmann::json;

json coeff_json(const mpz_class& c) {
  static const mpz_class lo = -(mpz_class(1) << 53), hi = mpz_class(1) << 53;
  if (c >= lo && c <= hi) return json(c.get_si());
  return json(c.get_str());
}

namespace {

json coeff_array(const std::vector<mpz_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(coeff_json(c));
  return arr;
}

}  // namespace

json to_json(const IntPolynomial& p) {
  return {{"low", 0}, {"coeffs", coeff_array(p.coeffs())}, {"text", p.text()}};
}

json to_json(const TruncatedLaurentSeries& s) {
  return {{"low", s.low()}, {"coeffs", coeff_array(s.coeffs())}, {"order", s.order()}};
}

json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"display", f.display()}};
}

json to_json(const ContinuedFraction& cf) {
  return {{"kind", cf.kind == CFKind::Regular ? "regular" : "hj"},
          {"prefix", cf.prefix},
          {"period", cf.period},
          {"text", cf.text()}};
}

json to_json(const QRealSeries& s) {
  json out = to_json(s.series);
  out["cf"] = s.cf.text();
  out["stabilized_upto"] = s.stabilized_upto;
  return out;
}

json to_json(const FunctionalEquation& eq) {
  return {{"a", to_json(eq.a)},
          {"b", to_json(eq.b)},
          {"c", to_json(eq.c)},
          {"display",
           "(" + eq.a.display() + ")*X^2 + (" + eq.b.display() + ")*X + (" + eq.c.display() +
               ") = 0"}};
}

json to_json(const RootSet& roots) {
  json arr = json::array();
  for (const auto& r : roots.roots)
    arr.push_back({{"re", r.value.real()},
                   {"im", r.value.imag()},
                   {"modulus", std::abs(r.value)},
                   {"residual", r.residual},
                   {"multiplicity", r.multiplicity}});
  return {{"degree", roots.degree}, {"tol", roots.tol}, {"roots", arr}};
}

json to_json(const AnnulusReport& rep) {
  return {{"id", rep.id},
          {"min_modulus", rep.min_modulus},
          {"max_modulus", rep.max_modulus},
          {"inner_bound", rep.inner_bound},
          {"outer_bound", rep.outer_bound},
          {"pass", rep.pass}};
}

json to_json(const RadiusReport& rep) {
  json out = {{"method", radius_method_name(rep.method)},
              {"value", rep.value},
              {"coefficient_count", rep.coefficient_count},
              {"numeric_estimate", rep.numeric_estimate},
              {"uncertainty", rep.uncertainty},
              {"cross_check_ok", rep.cross_check_ok}};
  if (rep.certificate) {
    out["certificate"] = {{"polynomial", rep.certificate->polynomial.display()},
                          {"polynomial_json", to_json(rep.certificate->polynomial)},
                          {"root_re", rep.certificate->chosen_root.real()},
                          {"root_im", rep.certificate->chosen_root.imag()},
                          {"residual", rep.certificate->residual},
                          {"degree", rep.certificate_degree}};
  }
  return out;
}

json to_json(const NumericRadiusResult& res) {
  return {{"ratio", to_json(res.ratio)},
          {"root", to_json(res.root)},
          {"limsup_rho", res.limsup_rho},
          {"radius", res.radius},
          {"uncertainty", res.uncertainty}};
}

json to_json(const GenThmReport& rep) {
  return {{"guaranteed", rep.guaranteed},
          {"condition_start", rep.condition_start},
          {"depth", rep.depth},
          {"min_root_modulus", rep.min_root_modulus},
          {"min_at_depth", rep.min_at_depth},
          {"inner_bound", rep.inner_bound},
          {"empirical_pass", rep.empirical_pass}};
}

json to_json(const ScanReport& rep) {
  json samples = json::array();
  for (const auto& s : rep.samples) {
    json item = {{"cf", s.cf_text},
                 {"method", radius_method_name(s.method)},
                 {"radius", s.radius},
                 {"certified", s.certified},
                 {"violation", s.violation},
                 {"unconfirmed", s.unconfirmed},
                 {"equality", s.equality},
                 {"certificate_degree", s.certificate_degree}};
    if (!s.error.empty()) item["error"] = s.error;
    samples.push_back(std::move(item));
  }
  return {{"seed", rep.config.seed},
          {"samples_requested", rep.config.samples},
          {"series_order", rep.config.series_order},
          {"tolerance", rep.config.tolerance},
          {"golden_radius", golden_radius()},
          {"min_certified_radius", rep.min_certified_radius},
          {"min_certified_cf", rep.min_certified_cf},
          {"violations", rep.violations},
          {"unconfirmed", rep.unconfirmed},
          {"equality_cases", rep.equality_cases},
          {"failures", rep.failures},
          {"samples", samples}};
}

}  // namespace qnum
