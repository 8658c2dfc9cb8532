#include <cstdlib>
#include <string_view>

#include "trapzssq/simd/kernels.hpp"

#if defined(TRAPZSSQ_HAVE_AVX2)
#include "kernels_avx2.hpp"
#endif

namespace trapzssq::simd {

const KernelTable* avx2_kernels() {
#if defined(TRAPZSSQ_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* env = std::getenv("TRAPZSSQ_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace trapzssq::simd
