#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "alphaspec/alpha.hpp"
#include "alphaspec/digraph.hpp"

namespace alphaspec {

/// Alpha-singular values of a named family from their closed forms.
struct ClosedFormSpectrum {
  FamilySpec family;
  AlphaParam alpha{0.0};
  std::vector<std::pair<double, std::size_t>> values;  ///< (value, multiplicity), multiplicity >= 1

  std::size_t total_multiplicity() const;
  /// Every value repeated by its multiplicity, sorted nonincreasing.
  std::vector<double> flattened() const;
  double trace_norm() const;
};

/// Directed path, directed cycle, oriented complete bipartite, complete
/// symmetric and Shrikhande digraphs. Throws InvalidArgument otherwise.
ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec, const AlphaParam& alpha);

bool has_closed_form(const FamilySpec& spec) noexcept;

/// sqrt(2a^2 - 2a + 1 + coefficient * a(1-a) cos(theta)), clamped at zero.
/// coefficient 2 is the cycle formula; other values exist for comparison.
double cycle_term(double alpha, double theta, double coefficient);

}  // namespace alphaspec
