#include <cstdlib>
#include <string>

#include "alphaspec/error.hpp"
#include "kernels_impl.hpp"

namespace alphaspec::simd {

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, "scalar", &scalar::dot, &scalar::dot3, &scalar::rotate,
                                 &scalar::axpy};
  return table;
}

const KernelTable* kernels_if_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#if defined(ALPHASPEC_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        static const KernelTable table{Isa::avx2, "avx2", &avx2::dot, &avx2::dot3, &avx2::rotate, &avx2::axpy};
        return &table;
      }
#endif
      return nullptr;
  }
  return nullptr;
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw InvalidArgument("unknown kernel set '" + std::string(name) + "' (expected scalar or avx2)");
}

namespace {

const KernelTable& select() {
  if (const char* env = std::getenv("ALPHA_SPECTRA_KERNELS"); env && *env) {
    if (const auto* t = kernels_if_supported(parse_isa(env))) return *t;
  }
  if (const auto* t = kernels_if_supported(Isa::avx2)) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace alphaspec::simd
