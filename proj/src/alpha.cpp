#include "alphaspec/alpha.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "alphaspec/error.hpp"

namespace alphaspec {

namespace {

[[noreturn]] void out_of_range(std::string_view text) {
  throw InvalidArgument("alpha must satisfy 0 <= alpha < 1, got " + std::string(text));
}

}  // namespace

AlphaParam::AlphaParam(double value) : value_(value), complement_(1.0 - value) {
  if (!std::isfinite(value) || value < 0.0 || value >= 1.0) out_of_range(std::to_string(value));
  for (std::int64_t q = 1; q <= kRecoveredDenominator; ++q) {
    const auto p = static_cast<std::int64_t>(std::llround(value * static_cast<double>(q)));
    if (static_cast<double>(p) / static_cast<double>(q) == value) {
      exact_ = Rational{p, q};
      complement_ = static_cast<double>(q - p) / static_cast<double>(q);
      break;
    }
  }
}

AlphaParam AlphaParam::ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidArgument("alpha denominator must be positive");
  if (num < 0 || num >= den) out_of_range(std::to_string(num) + "/" + std::to_string(den));
  const auto g = std::gcd(num, den);
  AlphaParam a;
  a.exact_ = Rational{num / g, den / g};
  a.value_ = static_cast<double>(a.exact_->num) / static_cast<double>(a.exact_->den);
  a.complement_ = static_cast<double>(a.exact_->den - a.exact_->num) / static_cast<double>(a.exact_->den);
  return a;
}

AlphaParam AlphaParam::parse(std::string_view text) {
  auto bad = [&] { return InvalidArgument("malformed alpha value '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
    return v;
  };
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = parse_int(text.substr(0, slash));
    const auto q = parse_int(text.substr(slash + 1));
    if (q <= 0) throw bad();
    if (p < 0 || p >= q) out_of_range(text);
    return ratio(p, q);
  }

  // Terminating decimal: keep the exact ratio when the digits fit.
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  const bool plain = (whole.empty() || whole.find_first_not_of("0123456789") == std::string_view::npos) &&
                     frac.find_first_not_of("0123456789") == std::string_view::npos &&
                     !(whole.empty() && frac.empty());
  if (plain && frac.size() <= 15 && whole.size() <= 3) {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    if (w != 0) out_of_range(text);
    return ratio(f, den);
  }

  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw bad();
  return AlphaParam(v);
}

bool AlphaParam::equals(std::int64_t p, std::int64_t q) const noexcept {
  if (exact_) return exact_->num * q == p * exact_->den;
  return std::abs(value_ * static_cast<double>(q) - static_cast<double>(p)) <= 1e-12 * static_cast<double>(q);
}

std::string AlphaParam::to_string() const {
  char buf[64];
  if (exact_) {
    // decimal if the denominator is 2^a 5^b, else p/q
    auto d = exact_->den;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) {
      std::snprintf(buf, sizeof buf, "%lld/%lld", static_cast<long long>(exact_->num),
                    static_cast<long long>(exact_->den));
      return buf;
    }
  }
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  // shortest round-tripping form
  for (int prec = 1; prec <= 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, value_);
    if (std::strtod(shorter, nullptr) == value_) return shorter;
  }
  return buf;
}

std::vector<AlphaParam> parse_alpha_list(std::string_view text) {
  std::vector<AlphaParam> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(AlphaParam::parse(first == std::string_view::npos ? std::string_view{}
                                                                    : item.substr(first, last - first + 1)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<AlphaParam> decimal_alpha_grid() {
  std::vector<AlphaParam> g;
  for (int k = 0; k < 10; ++k) g.push_back(AlphaParam::ratio(k, 10));
  return g;
}

std::vector<AlphaParam> quarter_alpha_grid() {
  std::vector<AlphaParam> g;
  for (int k = 0; k < 4; ++k) g.push_back(AlphaParam::ratio(k, 4));
  return g;
}

}  // namespace alphaspec
