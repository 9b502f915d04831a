#pragma once

#include <cstddef>
#include <string_view>

// Dense inner loops used by the spectral routines. Every kernel has a scalar
// reference implementation; wider variants are selected at runtime and are
// tested for agreement against the reference.

namespace alphaspec::simd {

enum class Isa { scalar, avx2 };

struct Dot3 {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

struct KernelTable {
  Isa isa;
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// x.x, y.y and x.y in one pass.
  Dot3 (*dot3)(const double* x, const double* y, std::size_t n);
  /// (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// y <- y + a x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* kernels_if_supported(Isa isa);

/// The table used by the library. Picked once: ALPHA_SPECTRA_KERNELS
/// ("scalar" or "avx2") if set and supported, else the widest supported ISA.
const KernelTable& active_kernels();

Isa parse_isa(std::string_view name);

}  // namespace alphaspec::simd
