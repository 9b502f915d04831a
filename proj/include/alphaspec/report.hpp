#pragma once

#include <string>

#include "alphaspec/bounds.hpp"
#include "alphaspec/closedform.hpp"
#include <json.hpp>

namespace alphaspec {

/// 12 significant digits, "%.12g"; negative zero prints as 0.
std::string format_number(double v);

/// Flat object with every report field plus the equality classification.
nlohmann::ordered_json to_json(const BoundReport& r, const Digraph& d);

/// n,a,alpha,trace_norm,spectral_norm,lower_basic,lower_det,upper_mcclelland,km_applicable,upper_km,equality
std::string bound_csv_header();
/// LF-terminated row. The equality column lists bound:case pairs joined by ';'.
std::string to_csv_row(const BoundReport& r, const Digraph& d);

nlohmann::ordered_json to_json(const SingularSpectrum& s);
nlohmann::ordered_json to_json(const ClosedFormSpectrum& c);

}  // namespace alphaspec
