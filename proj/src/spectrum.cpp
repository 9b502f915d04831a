#include "alphaspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "alphaspec/error.hpp"

namespace alphaspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 100;

// Smaller root of t^2 + 2 zeta t - 1 = 0.
double jacobi_tangent(double zeta) {
  if (std::abs(zeta) > 1e150) return 0.5 / zeta;
  const double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  return zeta < 0.0 ? -t : t;
}

}  // namespace

DenseMatrix build_alpha_matrix(const Digraph& d, const AlphaParam& alpha) {
  const std::size_t n = d.order();
  DenseMatrix m(n);
  const double off = alpha.complement();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (d.has_arc(i, j)) {
        m(i, j) = off;
        ++deg;
      }
    m(i, i) = alpha.value() * static_cast<double>(deg);
  }
  return m;
}

DenseMatrix gram(const DenseMatrix& m, const simd::KernelTable& k) {
  const std::size_t n = m.order();
  DenseMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = k.dot(m.row(i).data(), m.row(j).data(), n);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

// ---------------------------------------------------------------------------

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
  for (auto& v : values_) v = std::max(v, 0.0);
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double SingularSpectrum::trace_norm() const noexcept {
  // ascending order keeps the small terms from being absorbed
  double s = 0.0;
  for (auto it = values_.rbegin(); it != values_.rend(); ++it) s += *it;
  return s;
}

double SingularSpectrum::abs_det() const noexcept {
  double p = 1.0;
  for (double v : values_) p *= v;
  return p;
}

double SingularSpectrum::sum_of_squares() const noexcept {
  double s = 0.0;
  for (auto it = values_.rbegin(); it != values_.rend(); ++it) s += *it * *it;
  return s;
}

std::vector<std::pair<double, std::size_t>> SingularSpectrum::grouped(double rel_tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  const double tol = rel_tol * std::max(1.0, spectral_norm());
  for (double v : values_) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

SingularSpectrum singular_values(const DenseMatrix& m, const simd::KernelTable& k) {
  const std::size_t n = m.order();
  DenseMatrix rows = m;
  double frob_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) frob_sq += k.dot(rows.row(i).data(), rows.row(i).data(), n);
  // rows this small are rounding residue of a zero singular value
  const double floor_sq = (kEps * kEps) * frob_sq;
  // a length-n dot product carries about n ulps of rounding
  const double tol = kEps * static_cast<double>(std::max<std::size_t>(n, 1));
  for (int sweep = 0;; ++sweep) {
    if (sweep == kMaxSweeps)
      throw NumericalError("one-sided Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double* ri = rows.row(i).data();
      for (std::size_t j = i + 1; j < n; ++j) {
        double* rj = rows.row(j).data();
        const simd::Dot3 d = k.dot3(ri, rj, n);
        if (d.xy == 0.0 || std::abs(d.xy) <= tol * std::sqrt(d.xx) * std::sqrt(d.yy)) continue;
        if (d.xx <= floor_sq || d.yy <= floor_sq) continue;
        rotated = true;
        const double t = jacobi_tangent((d.yy - d.xx) / (2.0 * d.xy));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        k.rotate(ri, rj, n, c, c * t);
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(k.dot(rows.row(i).data(), rows.row(i).data(), n));
  return SingularSpectrum(std::move(sv));
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& s, const simd::KernelTable& k) {
  const std::size_t n = s.order();
  DenseMatrix a = s;
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) frob += k.dot(a.row(i).data(), a.row(i).data(), n);
  const double floor = 1e-17 * std::sqrt(frob);

  for (int sweep = 0;; ++sweep) {
    if (sweep == kMaxSweeps)
      throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= std::max(floor, kEps * std::sqrt(std::abs(a(p, p) * a(q, q))))) continue;
        rotated = true;
        const double t = jacobi_tangent((a(q, q) - a(p, p)) / (2.0 * apq));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double app = a(p, p) - t * apq;
        const double aqq = a(q, q) + t * apq;
        // rows p, q rotate as a contiguous pair; symmetry gives the columns
        k.rotate(a.row(p).data(), a.row(q).data(), n, c, c * t);
        for (std::size_t r = 0; r < n; ++r) {
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app;
        a(q, q) = aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    if (!rotated) break;
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double abs_determinant(const DenseMatrix& m, const simd::KernelTable& k) {
  const std::size_t n = m.order();
  DenseMatrix lu = m;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(lu(r, c)) > std::abs(lu(piv, c))) piv = r;
    if (lu(piv, c) == 0.0) return 0.0;
    if (piv != c) std::swap_ranges(lu.row(c).begin(), lu.row(c).end(), lu.row(piv).begin());
    const double pivot = lu(c, c);
    det *= std::abs(pivot);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = lu(r, c) / pivot;
      if (f != 0.0) k.axpy(-f, lu.row(c).data() + c, lu.row(r).data() + c, n - c);
    }
  }
  return det;
}

std::size_t numerical_rank(const Digraph& d, const AlphaParam& alpha, RankMode mode) {
  if (mode == RankMode::exact_rational) {
    if (!alpha.exact() || alpha.exact()->den > 64)
      throw InvalidArgument("exact rank needs alpha as p/q with q <= 64, got " + alpha.to_string());
    return exact_rank(d, *alpha.exact());
  }
  const auto spec = singular_values(build_alpha_matrix(d, alpha));
  const double cut = static_cast<double>(d.order()) * kEps * spec.spectral_norm() + 1e-12;
  return static_cast<std::size_t>(
      std::count_if(spec.values().begin(), spec.values().end(), [&](double s) { return s > cut; }));
}

}  // namespace alphaspec
