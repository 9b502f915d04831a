#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

#include "alphaspec/error.hpp"
#include "alphaspec/spectrum.hpp"

namespace alphaspec {

namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflow {};

// (a*d - b*c) / e with overflow detection.
long long cross_div(long long a, long long d, long long b, long long c, long long e) {
  long long ad = 0, bc = 0, diff = 0;
  if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(b, c, &bc) ||
      __builtin_sub_overflow(ad, bc, &diff))
    throw Overflow{};
  if (diff % e != 0) throw NumericalError("fraction-free elimination produced an inexact quotient");
  return diff / e;
}

Big cross_div(const Big& a, const Big& d, const Big& b, const Big& c, const Big& e) {
  Big diff = a * d - b * c;
  if (diff % e != 0) throw NumericalError("fraction-free elimination produced an inexact quotient");
  return diff / e;
}

// Bareiss elimination to row echelon form; entries stay integral minors.
template <typename T>
std::size_t bareiss_rank(std::size_t n, std::vector<T> m) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return m[i * n + j]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) at(i, j) = cross_div(at(rank, c), at(i, j), at(i, c), at(rank, j), prev);
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t integer_rank(std::size_t n, std::vector<long long> entries) {
  if (entries.size() != n * n) throw InvalidArgument("integer_rank: entry count must be n*n");
  try {
    return bareiss_rank<long long>(n, entries);
  } catch (const Overflow&) {
    return bareiss_rank<Big>(n, std::vector<Big>(entries.begin(), entries.end()));
  }
}

std::size_t exact_rank(const Digraph& d, const Rational& alpha) {
  if (alpha.den <= 0 || alpha.num < 0 || alpha.num >= alpha.den)
    throw InvalidArgument("exact_rank: alpha must be p/q with 0 <= p < q");
  const std::size_t n = d.order();
  std::vector<long long> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (d.has_arc(i, j)) {
        m[i * n + j] = alpha.den - alpha.num;
        ++deg;
      }
    m[i * n + i] = alpha.num * deg;
  }
  return integer_rank(n, std::move(m));
}

}  // namespace alphaspec
