#pragma once

#include <string>

#include "json.hpp"
#include "pcw/oracle.hpp"

namespace pcw {

/// Structured reports are JSON documents with alphabetically ordered keys.
using Report = nlohmann::json;

/// Deterministic serialization: 2-space indentation, keys in map order,
/// floating-point numbers always printed with 17 significant digits.
/// serialize_report(parse_report(s)) == s for any s this writer produced.
std::string serialize_report(const Report& doc);

/// Throws InputError on malformed text.
Report parse_report(const std::string& text);

Report report_from_verification(const VerificationReport& vr);
Report report_from_spectral(const SpectralBoundReport& r);
Report report_from_lp(const LpBoundReport& r);
Report report_from_fraction_matrix(const FractionMatrix& F);

/// Finite doubles map to JSON numbers; +infinity maps to the string
/// "infinite" (the marker used for the all-zero pseudocodeword).
Report report_number(double v);

}  // namespace pcw
