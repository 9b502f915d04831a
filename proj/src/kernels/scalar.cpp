#include "kernels_impl.hpp"

namespace alphaspec::simd::scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

Dot3 dot3(const double* x, const double* y, std::size_t n) {
  Dot3 r;
  for (std::size_t i = 0; i < n; ++i) {
    r.xx += x[i] * x[i];
    r.yy += y[i] * y[i];
    r.xy += x[i] * y[i];
  }
  return r;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace alphaspec::simd::scalar
