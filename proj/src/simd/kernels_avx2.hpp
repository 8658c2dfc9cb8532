#pragma once

#include "trapzssq/simd/kernels.hpp"

namespace trapzssq::simd {

// Defined only when the AVX2 translation unit is part of the build.
const KernelTable& avx2_kernel_table();

}  // namespace trapzssq::simd
