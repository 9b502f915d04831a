#pragma once

#include "alphaspec/kernels.hpp"

namespace alphaspec::simd {

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
Dot3 dot3(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
}  // namespace scalar

#if defined(ALPHASPEC_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
Dot3 dot3(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double a, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace alphaspec::simd
