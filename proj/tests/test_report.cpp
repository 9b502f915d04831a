#include <gtest/gtest.h>

#include <algorithm>

#include "alphaspec/report.hpp"

using namespace alphaspec;

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(BoundCsv, FixedColumns) {
  EXPECT_EQ(bound_csv_header(),
            "n,a,alpha,trace_norm,spectral_norm,lower_basic,lower_det,upper_mcclelland,km_applicable,upper_km,"
            "equality\n");
  const auto d = make_family(SymmetricComplete{3});
  const auto row = to_csv_row(bound_report(d, AlphaParam(0.0)), d);
  EXPECT_EQ(row.rfind("3,6,0,4,2,", 0), 0u) << row;
  EXPECT_NE(row.find("upper_km:RegularTwoSingularValues(2,1)\"\n"), std::string::npos) << row;
  EXPECT_EQ(row.back(), '\n');
  // the equality column is quoted, so exactly ten separators sit outside quotes
  int separators = 0;
  bool quoted = false;
  for (char c : row) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++separators;
  }
  EXPECT_EQ(separators, 10);
}

TEST(BoundCsv, Deterministic) {
  const auto d = make_family(DirectedCycle{5});
  const auto r1 = to_csv_row(bound_report(d, AlphaParam(0.3)), d);
  const auto r2 = to_csv_row(bound_report(d, AlphaParam(0.3)), d);
  EXPECT_EQ(r1, r2);
}

TEST(BoundJson, FlatObject) {
  const auto d = make_family(DirectedPath{3});
  const auto j = to_json(bound_report(d, AlphaParam(0.2)), d);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["a"], 2);
  EXPECT_FALSE(j["km_applicable"].get<bool>());
  EXPECT_TRUE(j["upper_km"].is_null());
  EXPECT_TRUE(j.contains("slack_lower_det"));
  for (const auto& [k, v] : j.items()) EXPECT_FALSE(v.is_object()) << k;
}

TEST(SpectrumJson, Fields) {
  const auto s = singular_values(build_alpha_matrix(make_family(DirectedCycle{3}), AlphaParam(0.5)));
  const auto j = to_json(s);
  EXPECT_EQ(j["values"].size(), 3u);
  EXPECT_NEAR(j["trace_norm"].get<double>(), 2.0, 1e-12);
  EXPECT_EQ(j["grouped"].size(), 2u);
  const auto cf = to_json(closed_form_spectrum(DirectedCycle{3}, AlphaParam(0.5)));
  EXPECT_EQ(cf["family"], "cycle:3");
}
