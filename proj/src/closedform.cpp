#include "alphaspec/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "alphaspec/error.hpp"

namespace alphaspec {

namespace {

// |alpha + (1 - alpha) e^{i theta}|, the cancellation-free form of
// sqrt(2a^2 - 2a + 1 + 2a(1-a) cos theta).
double rotation_modulus(const AlphaParam& alpha, double theta) {
  const double a = alpha.value();
  const double b = alpha.complement();
  return std::hypot(a + b * std::cos(theta), b * std::sin(theta));
}

}  // namespace

std::size_t ClosedFormSpectrum::total_multiplicity() const {
  std::size_t m = 0;
  for (const auto& [v, k] : values) m += k;
  return m;
}

std::vector<double> ClosedFormSpectrum::flattened() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& [v, k] : values) out.insert(out.end(), k, v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double ClosedFormSpectrum::trace_norm() const {
  double s = 0.0;
  for (const auto& [v, k] : values) s += v * static_cast<double>(k);
  return s;
}

double cycle_term(double alpha, double theta, double coefficient) {
  const double sq = 2.0 * alpha * alpha - 2.0 * alpha + 1.0 + coefficient * alpha * (1.0 - alpha) * std::cos(theta);
  return std::sqrt(std::max(sq, 0.0));
}

bool has_closed_form(const FamilySpec& spec) noexcept {
  return std::holds_alternative<DirectedPath>(spec) || std::holds_alternative<DirectedCycle>(spec) ||
         std::holds_alternative<OrientedCompleteBipartite>(spec) ||
         std::holds_alternative<SymmetricComplete>(spec) || std::holds_alternative<Shrikhande>(spec);
}

ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec, const AlphaParam& alpha) {
  if (!has_closed_form(spec)) throw InvalidArgument("no closed form for family " + to_string(spec));
  family_order(spec);
  ClosedFormSpectrum out{spec, alpha, {}};
  auto& v = out.values;
  const double a = alpha.value();
  const double b = alpha.complement();
  auto push = [&](double value, std::size_t mult) {
    if (mult > 0) v.emplace_back(value, mult);
  };

  if (const auto* p = std::get_if<DirectedPath>(&spec)) {
    push(0.0, 1);
    for (std::size_t j = 1; j < p->n; ++j)
      push(rotation_modulus(alpha, std::numbers::pi * static_cast<double>(j) / static_cast<double>(p->n)), 1);
  } else if (const auto* c = std::get_if<DirectedCycle>(&spec)) {
    for (std::size_t j = 0; j < c->n; ++j)
      push(rotation_modulus(alpha, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(c->n)), 1);
  } else if (const auto* k = std::get_if<OrientedCompleteBipartite>(&spec)) {
    const double r = static_cast<double>(k->r);
    const double s = static_cast<double>(k->s);
    push(std::sqrt(a * a * s * s + b * b * s * r), 1);
    push(a * s, k->r - 1);
    push(0.0, k->s);
  } else if (const auto* kn = std::get_if<SymmetricComplete>(&spec)) {
    const double n = static_cast<double>(kn->n);
    push(n - 1.0, 1);
    push(std::abs(n * a - 1.0), kn->n - 1);
  } else {
    push(6.0, 1);
    push(2.0 + 4.0 * a, 6);
    push(std::abs(8.0 * a - 2.0), 9);
  }
  return out;
}

}  // namespace alphaspec
