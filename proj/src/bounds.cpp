#include "alphaspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "alphaspec/error.hpp"

namespace alphaspec {

std::string_view to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::lower_det:
      return "lower_det";
    case BoundId::lower_basic:
      return "lower_basic";
    case BoundId::upper_mcclelland:
      return "upper_mcclelland";
    case BoundId::upper_km:
      return "upper_km";
  }
  return "?";
}

BoundId parse_bound_id(std::string_view name) {
  for (auto id : kAllBounds)
    if (to_string(id) == name) return id;
  throw InvalidArgument("unknown bound id '" + std::string(name) + "'");
}

BoundReport bound_report(const Digraph& d, const AlphaParam& alpha) {
  BoundReport r;
  r.n = d.order();
  r.arcs = d.arc_count();
  r.alpha = alpha;
  for (auto deg : d.out_degrees()) {
    r.sum_sq_outdeg += deg * deg;
    r.max_outdeg = std::max(r.max_outdeg, deg);
  }

  const DenseMatrix a = build_alpha_matrix(d, alpha);
  r.spectrum = singular_values(a);
  r.trace_norm = r.spectrum.trace_norm();
  r.spectral_norm = r.spectrum.spectral_norm();
  r.abs_det = abs_determinant(a);

  if (r.n < 2) return r;
  r.bounds_applicable = true;

  const double n = static_cast<double>(r.n);
  const double arcs = static_cast<double>(r.arcs);
  const double al = alpha.value();
  const double be = alpha.complement();
  r.frobenius_sq = be * be * arcs + al * al * static_cast<double>(r.sum_sq_outdeg);

  r.lower_basic = std::sqrt(r.frobenius_sq);
  const double det_term = r.abs_det <= kDeterminantCutoff ? 0.0 : std::exp((2.0 / n) * std::log(r.abs_det));
  r.lower_det = std::sqrt(r.frobenius_sq + n * (n - 1.0) * det_term);
  r.spectral_floor = arcs / n;
  r.upper_mcclelland = std::sqrt(n * r.frobenius_sq);

  r.km_beta = std::max(be, al * static_cast<double>(r.max_outdeg));
  r.km_applicable = arcs >= n * r.km_beta;
  if (r.km_applicable) {
    const double mean = arcs / n;
    r.upper_km = mean + std::sqrt((n - 1.0) * std::max(0.0, r.frobenius_sq - mean * mean));
  }

  auto set = [&](BoundId id, std::optional<double> slack) {
    const auto i = static_cast<std::size_t>(id);
    r.slack[i] = slack;
    r.equality[i] = slack && std::abs(*slack) <= kEqualityTolerance;
  };
  set(BoundId::lower_det, r.trace_norm - r.lower_det);
  set(BoundId::lower_basic, r.trace_norm - r.lower_basic);
  set(BoundId::upper_mcclelland, r.upper_mcclelland - r.trace_norm);
  set(BoundId::upper_km, r.upper_km ? std::optional<double>(*r.upper_km - r.trace_norm) : std::nullopt);
  r.spectral_floor_attained = std::abs(r.spectral_norm - r.spectral_floor) <= kEqualityTolerance;
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(const EqualityCase& c) {
  char buf[128];
  struct V {
    char* buf;
    std::string operator()(const eq::None&) const { return "None"; }
    std::string operator()(const eq::Discrete&) const { return "Discrete"; }
    std::string operator()(const eq::CycleDirectSumAtAlphaZero&) const { return "CycleDirectSumAtAlphaZero"; }
    std::string operator()(const eq::OcbAtAlphaZero& e) const {
      std::snprintf(buf, 128, "OcbAtAlphaZero(%zu,%zu,%zu)", e.r, e.s, e.isolated);
      return buf;
    }
    std::string operator()(const eq::SymK2AtHalf& e) const {
      std::snprintf(buf, 128, "SymK2AtHalf(%zu)", e.isolated);
      return buf;
    }
    std::string operator()(const eq::OutStar& e) const {
      std::snprintf(buf, 128, "OutStar(%zu,%zu)", e.s, e.isolated);
      return buf;
    }
    std::string operator()(const eq::CliqueWithSinks& e) const {
      std::snprintf(buf, 128, "CliqueWithSinks(%zu,%zu,%zu)", e.m, e.t, e.isolated);
      return buf;
    }
    std::string operator()(const eq::TwoVertex&) const { return "TwoVertex"; }
    std::string operator()(const eq::RegularTwoSingularValues& e) const {
      std::snprintf(buf, 128, "RegularTwoSingularValues(%.12g,%.12g)", e.sigma1, e.sigma);
      return buf;
    }
  };
  return std::visit(V{buf}, c);
}

EqualityCase classify_rank_one(const Digraph& d, const AlphaParam& alpha) {
  const std::size_t n = d.order();
  if (d.arc_count() == 0) return eq::None{};
  if (alpha.is_zero()) {
    if (auto ocb = classify_structure(d).ocb_plus_isolated) return eq::OcbAtAlphaZero{ocb->r, ocb->s, ocb->isolated};
    return eq::None{};
  }

  const auto out = d.out_degrees();
  const auto in = d.in_degrees();
  // S: vertices with arcs out; T: pure sinks; the rest isolated
  std::vector<bool> in_support(n, false);
  std::size_t m = 0, t = 0, isolated = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (out[v] > 0) {
      ++m;
      in_support[v] = true;
    } else if (in[v] > 0) {
      ++t;
      in_support[v] = true;
    } else {
      ++isolated;
    }
  }
  // each row of A_alpha must have support exactly S u T
  for (std::size_t u = 0; u < n; ++u) {
    if (out[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (v != u && d.has_arc(u, v) != in_support[v]) return eq::None{};
  }
  if (m == 1) return eq::OutStar{t, isolated};
  if (!alpha.equals(1, static_cast<std::int64_t>(m + t))) return eq::None{};
  if (m == 2 && t == 0) return eq::SymK2AtHalf{isolated};
  return eq::CliqueWithSinks{m, t, isolated};
}

EqualityCase classify_equality(const Digraph& d, const AlphaParam& alpha, BoundId which) {
  return classify_equality(d, bound_report(d, alpha), which);
}

EqualityCase classify_equality(const Digraph& d, const BoundReport& report, BoundId which) {
  if (!report.bounds_applicable) return eq::None{};
  const auto flags = classify_structure(d);
  const bool cycles_at_zero = report.alpha.is_zero() && flags.is_permutation_digraph;

  switch (which) {
    case BoundId::lower_det: {
      if (flags.is_discrete) return eq::Discrete{};
      if (cycles_at_zero) return eq::CycleDirectSumAtAlphaZero{};
      if (auto c = classify_rank_one(d, report.alpha); !is_none(c)) return c;
      if (report.n == 2) return eq::TwoVertex{};
      return eq::None{};
    }
    case BoundId::lower_basic: {
      if (flags.is_discrete) return eq::Discrete{};
      return classify_rank_one(d, report.alpha);
    }
    case BoundId::upper_mcclelland: {
      if (flags.is_discrete) return eq::Discrete{};
      if (cycles_at_zero) return eq::CycleDirectSumAtAlphaZero{};
      return eq::None{};
    }
    case BoundId::upper_km: {
      if (!report.km_applicable) return eq::None{};
      if (cycles_at_zero) return eq::CycleDirectSumAtAlphaZero{};
      if (!flags.regular_degree) return eq::None{};
      const double n = static_cast<double>(report.n);
      const double mean = static_cast<double>(report.arcs) / n;
      const double sigma = std::sqrt(std::max(0.0, (report.frobenius_sq - mean * mean) / (n - 1.0)));
      const double tol = 1e-8 * std::max(1.0, report.spectral_norm);
      const auto& v = report.spectrum.values();
      if (std::abs(v[0] - mean) > tol) return eq::None{};
      for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i] - sigma) > tol) return eq::None{};
      return eq::RegularTwoSingularValues{mean, sigma};
    }
  }
  throw InvalidArgument("unknown bound id");
}

bool listed_in_published_characterization(const EqualityCase& c, BoundId which, IsolatedReading reading) {
  const bool discrete = std::holds_alternative<eq::Discrete>(c);
  const bool cycles = std::holds_alternative<eq::CycleDirectSumAtAlphaZero>(c);
  const bool ocb = std::holds_alternative<eq::OcbAtAlphaZero>(c);
  bool k2 = false;
  if (const auto* e = std::get_if<eq::SymK2AtHalf>(&c)) k2 = reading == IsolatedReading::inclusive || e->isolated == 0;
  switch (which) {
    case BoundId::lower_det:
      return discrete || cycles || ocb || k2;
    case BoundId::lower_basic:
      return discrete || ocb || k2;
    case BoundId::upper_mcclelland:
      return discrete || cycles;
    case BoundId::upper_km:
      return cycles || std::holds_alternative<eq::RegularTwoSingularValues>(c);
  }
  return false;
}

bool published_rank_one(const Digraph& d, const AlphaParam& alpha, IsolatedReading reading) {
  const auto flags = classify_structure(d);
  if (alpha.is_zero()) return flags.ocb_plus_isolated.has_value();
  if (!alpha.equals(1, 2)) return false;
  // symmetric 2-cycle, optionally with isolated vertices
  if (d.arc_count() != 2) return false;
  const auto arcs = d.arcs();
  const bool k2 = arcs[0].first == arcs[1].second && arcs[0].second == arcs[1].first;
  return k2 && (reading == IsolatedReading::inclusive || d.order() == 2);
}

// ---------------------------------------------------------------------------

SpectralFloor spectral_floor_check(const Digraph& d, const AlphaParam& alpha) {
  if (d.order() < 2) throw InvalidArgument("spectral_floor_check requires n >= 2");
  SpectralFloor f;
  f.floor = static_cast<double>(d.arc_count()) / static_cast<double>(d.order());
  f.sigma1 = singular_values(build_alpha_matrix(d, alpha)).spectral_norm();
  f.attained = std::abs(f.sigma1 - f.floor) <= kEqualityTolerance;
  return f;
}

std::optional<BibdParams> is_symmetric_bibd(const Digraph& d) {
  const std::size_t n = d.order();
  auto common = [&](std::size_t i, std::size_t j) {
    std::size_t c = 0;
    for (std::size_t v = 0; v < n; ++v) c += d.has_arc(i, v) && d.has_arc(j, v);
    return c;
  };
  const std::size_t k = d.out_degree(0);
  if (k == 0) return std::nullopt;
  const std::size_t lambda = n > 1 ? common(0, 1) : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.out_degree(i) != k) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j)
      if (common(i, j) != lambda) return std::nullopt;
  }
  return BibdParams{n, k, lambda};
}

}  // namespace alphaspec
