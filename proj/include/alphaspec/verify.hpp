#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphaspec/alpha.hpp"
#include "alphaspec/digraph.hpp"

namespace alphaspec {

inline constexpr std::size_t kMaxReportedItems = 100;

/// A check that failed: a proven or computed invariant did not hold.
struct Failure {
  std::string digraph;  ///< encode() form, reproducible through decode()
  std::string alpha;
  std::string check;
  std::string observed;
  std::string expected;
  friend bool operator==(const Failure&, const Failure&) = default;
};

/// The computed behaviour is internally consistent but disagrees with a
/// published statement (for example a rank-one digraph that the published
/// characterization omits).
struct Deviation {
  std::string digraph;
  std::string alpha;
  std::string check;
  std::string detail;
  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct VerificationSummary {
  std::string suite;
  nlohmann::ordered_json parameters;
  std::uint64_t checks_run = 0;
  std::vector<Failure> failures;  ///< first kMaxReportedItems, in sweep order
  std::uint64_t failure_count = 0;
  std::vector<Deviation> deviations;
  std::uint64_t deviation_count = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
  void add_failure(Failure f);
  void add_deviation(Deviation d);
  /// Appends other's items after this one's, keeping the caps and exact counts.
  void merge(const VerificationSummary& other);
};

nlohmann::ordered_json to_json(const VerificationSummary& s);
std::string to_text(const VerificationSummary& s);

/// Called from the coordinating thread after each batch: (items done, total).
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

struct ExhaustiveOptions {
  bool allow_n5 = false;  ///< n = 5 is about a million digraphs per alpha
  ProgressFn progress;
};

/// Every digraph on n vertices (2 <= n <= 5) against every alpha in the grid:
/// bound sandwich, spectral floor, exact rank one characterization, equality
/// flags against their classification, Frobenius identity, determinant
/// cross-check. Grid values must be exact fractions with denominator <= 64.
VerificationSummary run_exhaustive(std::size_t n, const std::vector<AlphaParam>& grid,
                                   const ExhaustiveOptions& options = {});

/// Minimum alpha = 0 trace norm over all oriented trees on n vertices
/// (2 <= n <= 6): sqrt(n-1), attained exactly by stars with every arc pointing
/// out of or into the centre. Also checks the lower bound at alpha in
/// {1/4, 1/2, 3/4} is strict off the stars.
VerificationSummary verify_tree_minimum(std::size_t n);

struct KmCandidate {
  std::string digraph;
  AlphaParam alpha;
  double trace_norm;
  double upper_km;
};

/// (D, alpha) pairs for 2 <= n <= n_max (<= 5) meeting the upper bound
/// a/n + sqrt((n-1)(F - a^2/n^2)) within 1e-9 where its hypothesis holds.
/// Only the swept range is covered; this is not a characterization.
std::vector<KmCandidate> find_km_equality_candidates(std::size_t n_max, const std::vector<AlphaParam>& grid,
                                                     const ProgressFn& progress = {});

/// Compares the directed cycle spectrum with cosine coefficient 2a(1-a) and
/// with a(1-a) against the numeric spectrum for n = 3..n_max and alpha in
/// {1/4, 1/2, 3/4}. A mismatch of the 2a(1-a) form is a failure.
VerificationSummary arbitrate_cycle_coefficient(std::size_t n_max);

/// Worker count: ALPHA_SPECTRA_THREADS when set to a positive integer, else
/// the hardware concurrency.
unsigned worker_count();

}  // namespace alphaspec
