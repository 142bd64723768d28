#pragma once

#include <string>

#include <json.hpp>

#include "qnum/analysis.hpp"
#include "qnum/continued_fraction.hpp"
#include "qnum/int_polynomial.hpp"
#include "qnum/laurent.hpp"
#include "qnum/qseries.hpp"
#include "qnum/rational_function.hpp"
#include "qnum/roots.hpp"

namespace qnum {

/// Integer coefficients are emitted as JSON numbers while they fit 53 bits,
/// as decimal strings beyond that.
nlohmann::json coeff_json(const mpz_class& c);

nlohmann::json to_json(const IntPolynomial& p);          // {"low": 0, "coeffs": [...]}
nlohmann::json to_json(const TruncatedLaurentSeries& s); // {"low": l, "coeffs": [...]}
nlohmann::json to_json(const RationalFunction& f);
nlohmann::json to_json(const ContinuedFraction& cf);
nlohmann::json to_json(const QRealSeries& s);
nlohmann::json to_json(const FunctionalEquation& eq);
nlohmann::json to_json(const RootSet& roots);
nlohmann::json to_json(const AnnulusReport& rep);
nlohmann::json to_json(const RadiusReport& rep);
nlohmann::json to_json(const NumericRadiusResult& res);
nlohmann::json to_json(const GenThmReport& rep);
nlohmann::json to_json(const ScanReport& rep);

}  // namespace qnum
