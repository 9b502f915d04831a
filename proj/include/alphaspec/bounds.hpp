#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "alphaspec/alpha.hpp"
#include "alphaspec/digraph.hpp"
#include "alphaspec/spectrum.hpp"

namespace alphaspec {

/// Absolute slack below which a bound counts as attained.
inline constexpr double kEqualityTolerance = 1e-9;
/// |det| at or below this is treated as exactly zero before the 2/n power.
inline constexpr double kDeterminantCutoff = 1e-12;

enum class BoundId { lower_det, lower_basic, upper_mcclelland, upper_km };
inline constexpr std::array<BoundId, 4> kAllBounds = {BoundId::lower_det, BoundId::lower_basic,
                                                      BoundId::upper_mcclelland, BoundId::upper_km};

std::string_view to_string(BoundId id) noexcept;
/// Throws InvalidArgument on an unknown name.
BoundId parse_bound_id(std::string_view name);

/// Every trace-norm bound for one (D, alpha), with slacks and equality flags.
///
/// Lower bounds:
///   lower_basic = sqrt(F),  F = (1-a)^2 arcs + a^2 sum(d+^2)  (= sum sigma_i^2)
///   lower_det   = sqrt(F + n(n-1) |det A|^(2/n))
/// Upper bounds:
///   upper_mcclelland = sqrt(n F)
///   upper_km         = arcs/n + sqrt((n-1)(F - arcs^2/n^2)), only when arcs >= n * beta,
///                      beta = max(1-a, a * max d+)
/// Spectral norm floor: sigma_1 >= arcs/n.
///
/// For n = 1 only the spectrum is filled in and bounds_applicable is false.
struct BoundReport {
  std::size_t n = 0;
  std::size_t arcs = 0;
  std::size_t sum_sq_outdeg = 0;
  std::size_t max_outdeg = 0;
  AlphaParam alpha{0.0};

  SingularSpectrum spectrum;
  double trace_norm = 0.0;
  double spectral_norm = 0.0;
  double abs_det = 0.0;

  bool bounds_applicable = false;
  double frobenius_sq = 0.0;  ///< F
  double lower_basic = 0.0;
  double lower_det = 0.0;
  double spectral_floor = 0.0;
  double upper_mcclelland = 0.0;
  double km_beta = 0.0;
  bool km_applicable = false;
  std::optional<double> upper_km;

  /// Nonnegative when the bound holds; indexed by BoundId.
  std::array<std::optional<double>, 4> slack{};
  std::array<bool, 4> equality{};
  bool spectral_floor_attained = false;

  std::optional<double> slack_of(BoundId id) const { return slack[static_cast<std::size_t>(id)]; }
  bool attains(BoundId id) const { return equality[static_cast<std::size_t>(id)]; }
};

BoundReport bound_report(const Digraph& d, const AlphaParam& alpha);

// ---------------------------------------------------------------------------
// Equality cases

namespace eq {
struct None {};
struct Discrete {};
/// alpha = 0 and every vertex has in- and out-degree 1.
struct CycleDirectSumAtAlphaZero {};
struct OcbAtAlphaZero {
  std::size_t r, s, isolated;
};
/// alpha = 1/2 and D is the symmetric 2-cycle plus isolated vertices.
struct SymK2AtHalf {
  std::size_t isolated;
};
/// alpha > 0, a single source joined to s sinks: the alpha matrix has rank 1 for every alpha.
struct OutStar {
  std::size_t s, isolated;
};
/// alpha = 1/(m+t) > 0: m >= 2 mutually adjacent vertices all pointing to the same t
/// sinks. Every nonzero entry of A_alpha equals 1-alpha, so the rank is 1.
struct CliqueWithSinks {
  std::size_t m, t, isolated;
};
/// n = 2: the determinant bound has a single AM-GM term and is always tight.
struct TwoVertex {};
struct RegularTwoSingularValues {
  double sigma1, sigma;
};
}  // namespace eq

using EqualityCase = std::variant<eq::None, eq::Discrete, eq::CycleDirectSumAtAlphaZero, eq::OcbAtAlphaZero,
                                  eq::SymK2AtHalf, eq::OutStar, eq::CliqueWithSinks, eq::TwoVertex,
                                  eq::RegularTwoSingularValues>;

inline bool is_none(const EqualityCase& c) noexcept { return std::holds_alternative<eq::None>(c); }
std::string to_string(const EqualityCase& c);

/// Structure under which A_alpha(D) has rank exactly 1, or eq::None.
/// The complete list: OcbAtAlphaZero, SymK2AtHalf, OutStar, CliqueWithSinks.
EqualityCase classify_rank_one(const Digraph& d, const AlphaParam& alpha);

/// The structural case under which `which` is attained for (D, alpha), or eq::None.
EqualityCase classify_equality(const Digraph& d, const AlphaParam& alpha, BoundId which);
EqualityCase classify_equality(const Digraph& d, const BoundReport& report, BoundId which);

/// How "D = symmetric K2" is read in the published statements: strictly, or
/// with isolated vertices allowed as for the complete bipartite case.
enum class IsolatedReading { strict, inclusive };

/// Whether the published equality characterization of `which` lists `c`.
bool listed_in_published_characterization(const EqualityCase& c, BoundId which, IsolatedReading reading);

/// The published rank-one characterization: alpha = 0 and D an oriented
/// complete bipartite digraph plus isolated vertices, or alpha = 1/2 and D the
/// symmetric 2-cycle.
bool published_rank_one(const Digraph& d, const AlphaParam& alpha, IsolatedReading reading);

// ---------------------------------------------------------------------------

struct SpectralFloor {
  double floor = 0.0;
  double sigma1 = 0.0;
  bool attained = false;
};

/// sigma_1 >= arcs/n; attained within 1e-9. Requires n >= 2.
SpectralFloor spectral_floor_check(const Digraph& d, const AlphaParam& alpha);

struct BibdParams {
  std::size_t n, k, lambda;
  friend bool operator==(const BibdParams&, const BibdParams&) = default;
};

/// (n, k, lambda) iff A A^T = lambda J + (k - lambda) I over the integers with k >= 1.
std::optional<BibdParams> is_symmetric_bibd(const Digraph& d);

}  // namespace alphaspec
