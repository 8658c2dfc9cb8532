#pragma once

// Data-parallel inner loops. Every routine has a scalar reference version;
// x86-64 builds add AVX2+FMA versions selected at runtime. All pointers
// address contiguous std::complex<double> arrays of length n.

#include <complex>
#include <cstddef>

namespace trapzssq::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// sum_j sigma_j dgamma_j / (gamma_j - z)^m, m >= 1. Weight not applied.
  cplx (*cauchy_sum)(const cplx* gamma, const cplx* dgamma, const cplx* sigma, std::size_t n,
                     cplx z, int m);

  /// out_j = sigma_j dgamma_j ((xi_j - zeta) / (gamma_j - z))^m.
  void (*regularized_integrand)(const cplx* gamma, const cplx* dgamma, const cplx* sigma,
                                const cplx* xi, std::size_t n, cplx z, cplx zeta, int m,
                                cplx* out);

  /// sum_{k=-K}^{K} coeffs[k + K] e^{ikt}.
  cplx (*series_sum)(const cplx* coeffs, int mode_bound, cplx t);

  /// row_j = Im[dgamma_j / (gamma_j - gamma_i)] w for j != i; row_i is
  /// left unspecified.
  void (*dlp_row)(const cplx* gamma, const cplx* dgamma, std::size_t n, std::size_t i, double w,
                  double* row);
};

const KernelTable& scalar_kernels();

/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

/// Table used by the library. Best supported ISA unless the environment
/// variable TRAPZSSQ_SIMD is set to "scalar".
const KernelTable& active_kernels();

}  // namespace trapzssq::simd
