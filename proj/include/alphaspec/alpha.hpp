#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alphaspec {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  ///< > 0, gcd(num, den) == 1

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// The mixing weight of the alpha matrix, restricted to [0, 1).
///
/// When built from a fraction or a terminating decimal the exact value is kept
/// alongside the double so exact-rank computations and alpha == 1/2 style tests
/// need no tolerance.
class AlphaParam {
 public:
  static constexpr std::int64_t kRecoveredDenominator = 64;

  /// Throws InvalidArgument unless 0 <= value < 1. A double that is exactly
  /// the nearest double to some p/q with q <= 64 (0.5, 0.1, 1.0/3) keeps p/q.
  explicit AlphaParam(double value);
  static AlphaParam ratio(std::int64_t num, std::int64_t den);
  /// Accepts "0.25", "1/4", ".5", "0".
  static AlphaParam parse(std::string_view text);

  double value() const noexcept { return value_; }
  /// 1 - alpha, computed from the exact ratio when one is known.
  double complement() const noexcept { return complement_; }
  const std::optional<Rational>& exact() const noexcept { return exact_; }

  bool is_zero() const noexcept { return value_ == 0.0; }
  /// alpha == p/q, exactly when a ratio is known, else to 1e-12.
  bool equals(std::int64_t p, std::int64_t q) const noexcept;

  /// Shortest text that parses back to the same parameter.
  std::string to_string() const;

  friend bool operator==(const AlphaParam& a, const AlphaParam& b) { return a.value_ == b.value_; }

 private:
  AlphaParam() = default;

  double value_ = 0.0;
  double complement_ = 1.0;
  std::optional<Rational> exact_;
};

/// Comma-separated list of alpha values.
std::vector<AlphaParam> parse_alpha_list(std::string_view text);

/// {0, 0.1, ..., 0.9}
std::vector<AlphaParam> decimal_alpha_grid();
/// {0, 1/4, 1/2, 3/4}
std::vector<AlphaParam> quarter_alpha_grid();

}  // namespace alphaspec
