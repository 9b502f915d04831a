#include "alphaspec/report.hpp"

#include <cstdio>

namespace alphaspec {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string equality_tags(const BoundReport& r, const Digraph& d) {
  std::string tags;
  for (auto id : kAllBounds) {
    if (!r.attains(id)) continue;
    if (!tags.empty()) tags += ';';
    tags += std::string(to_string(id)) + ":" + to_string(classify_equality(d, r, id));
  }
  return tags;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const SingularSpectrum& s) {
  nlohmann::ordered_json j;
  j["values"] = s.values();
  j["trace_norm"] = s.trace_norm();
  j["spectral_norm"] = s.spectral_norm();
  j["abs_det"] = s.abs_det();
  auto groups = nlohmann::ordered_json::array();
  for (const auto& [v, m] : s.grouped()) groups.push_back({{"value", v}, {"multiplicity", m}});
  j["grouped"] = std::move(groups);
  return j;
}

nlohmann::ordered_json to_json(const ClosedFormSpectrum& c) {
  nlohmann::ordered_json j;
  j["family"] = to_string(c.family);
  j["alpha"] = c.alpha.value();
  auto groups = nlohmann::ordered_json::array();
  for (const auto& [v, m] : c.values) groups.push_back({{"value", v}, {"multiplicity", m}});
  j["values"] = std::move(groups);
  j["trace_norm"] = c.trace_norm();
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& r, const Digraph& d) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["a"] = r.arcs;
  j["alpha"] = r.alpha.value();
  j["sum_sq_outdeg"] = r.sum_sq_outdeg;
  j["trace_norm"] = r.trace_norm;
  j["spectral_norm"] = r.spectral_norm;
  j["abs_det"] = r.abs_det;
  j["bounds_applicable"] = r.bounds_applicable;
  if (r.bounds_applicable) {
    j["lower_basic"] = r.lower_basic;
    j["lower_det"] = r.lower_det;
    j["spectral_floor"] = r.spectral_floor;
    j["spectral_floor_attained"] = r.spectral_floor_attained;
    j["upper_mcclelland"] = r.upper_mcclelland;
    j["km_beta"] = r.km_beta;
    j["km_applicable"] = r.km_applicable;
    j["upper_km"] = r.upper_km ? nlohmann::ordered_json(*r.upper_km) : nlohmann::ordered_json(nullptr);
    for (auto id : kAllBounds) {
      const std::string key(to_string(id));
      const auto s = r.slack_of(id);
      j["slack_" + key] = s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
      j["equality_" + key] = r.attains(id);
      j["case_" + key] = r.attains(id) ? to_string(classify_equality(d, r, id)) : std::string("None");
    }
  }
  return j;
}

std::string bound_csv_header() {
  return "n,a,alpha,trace_norm,spectral_norm,lower_basic,lower_det,upper_mcclelland,km_applicable,upper_km,"
         "equality\n";
}

std::string to_csv_row(const BoundReport& r, const Digraph& d) {
  std::string row = std::to_string(r.n) + "," + std::to_string(r.arcs) + "," + format_number(r.alpha.value()) +
                    "," + format_number(r.trace_norm) + "," + format_number(r.spectral_norm) + ",";
  if (r.bounds_applicable) {
    row += format_number(r.lower_basic) + "," + format_number(r.lower_det) + "," +
           format_number(r.upper_mcclelland) + "," + (r.km_applicable ? "true" : "false") + "," +
           (r.upper_km ? format_number(*r.upper_km) : std::string()) + "," + csv_field(equality_tags(r, d));
  } else {
    row += ",,,false,,";
  }
  return row + "\n";
}

}  // namespace alphaspec
