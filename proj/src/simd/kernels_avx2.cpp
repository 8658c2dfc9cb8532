// AVX2+FMA variants. Compiled with -mavx2 -mfma; only reached through the
// dispatcher after a CPU feature check.

#include <immintrin.h>

#include <cmath>

#include "kernels_avx2.hpp"

namespace trapzssq::simd {
namespace {

// A __m256d holds two interleaved complex numbers [re0 im0 re1 im1], which is
// exactly the std::complex<double> array layout.

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d bcast(cplx z) { return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag()); }

inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d br = _mm256_movedup_pd(b);
  const __m256d bi = _mm256_permute_pd(b, 0xF);
  const __m256d as = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

inline __m256d crecip(__m256d a) {
  const __m256d sq = _mm256_mul_pd(a, a);
  const __m256d nrm = _mm256_hadd_pd(sq, sq);
  const __m256d conj = _mm256_xor_pd(a, _mm256_setr_pd(0.0, -0.0, 0.0, -0.0));
  return _mm256_div_pd(conj, nrm);
}

inline __m256d cpow(__m256d a, int m) {
  __m256d r = a;
  for (int p = 1; p < m; ++p) r = cmul(r, a);
  return r;
}

inline cplx hsum(__m256d v) {
  alignas(32) double d[4];
  _mm256_store_pd(d, v);
  return {d[0] + d[2], d[1] + d[3]};
}

inline cplx lane(__m256d v, int which) {
  alignas(32) double d[4];
  _mm256_store_pd(d, v);
  return {d[2 * which], d[2 * which + 1]};
}

// Scalar tail matching the vector formula.
inline cplx cauchy_term(cplx g, cplx dg, cplx s, cplx z, int m) {
  const cplx d = g - z;
  const double nrm = d.real() * d.real() + d.imag() * d.imag();
  const cplx inv(d.real() / nrm, -d.imag() / nrm);
  cplx q = inv;
  for (int p = 1; p < m; ++p) q = {q.real() * inv.real() - q.imag() * inv.imag(),
                                   q.real() * inv.imag() + q.imag() * inv.real()};
  const cplx sd(s.real() * dg.real() - s.imag() * dg.imag(), s.real() * dg.imag() + s.imag() * dg.real());
  return {sd.real() * q.real() - sd.imag() * q.imag(), sd.real() * q.imag() + sd.imag() * q.real()};
}

cplx cauchy_sum(const cplx* gamma, const cplx* dgamma, const cplx* sigma, std::size_t n, cplx z,
                int m) {
  const __m256d zv = bcast(z);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d q0 = cpow(crecip(_mm256_sub_pd(load2(gamma + j), zv)), m);
    const __m256d q1 = cpow(crecip(_mm256_sub_pd(load2(gamma + j + 2), zv)), m);
    const __m256d s0 = cmul(load2(sigma + j), load2(dgamma + j));
    const __m256d s1 = cmul(load2(sigma + j + 2), load2(dgamma + j + 2));
    acc0 = _mm256_add_pd(acc0, cmul(s0, q0));
    acc1 = _mm256_add_pd(acc1, cmul(s1, q1));
  }
  cplx acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; j < n; ++j) acc += cauchy_term(gamma[j], dgamma[j], sigma[j], z, m);
  return acc;
}

void regularized_integrand(const cplx* gamma, const cplx* dgamma, const cplx* sigma,
                           const cplx* xi, std::size_t n, cplx z, cplx zeta, int m, cplx* out) {
  const __m256d zv = bcast(z);
  const __m256d zetav = bcast(zeta);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d inv = crecip(_mm256_sub_pd(load2(gamma + j), zv));
    const __m256d ratio = cmul(_mm256_sub_pd(load2(xi + j), zetav), inv);
    const __m256d sd = cmul(load2(sigma + j), load2(dgamma + j));
    store2(out + j, cmul(sd, cpow(ratio, m)));
  }
  for (; j < n; ++j) {
    // (xi - zeta)^m sigma dgamma / (gamma - z)^m, same grouping as above.
    const cplx d = gamma[j] - z;
    const double nrm = d.real() * d.real() + d.imag() * d.imag();
    const cplx inv(d.real() / nrm, -d.imag() / nrm);
    const cplx a = xi[j] - zeta;
    cplx ratio(a.real() * inv.real() - a.imag() * inv.imag(), a.real() * inv.imag() + a.imag() * inv.real());
    cplx r = ratio;
    for (int p = 1; p < m; ++p) r = {r.real() * ratio.real() - r.imag() * ratio.imag(),
                                     r.real() * ratio.imag() + r.imag() * ratio.real()};
    const cplx s = sigma[j], g = dgamma[j];
    const cplx sd(s.real() * g.real() - s.imag() * g.imag(), s.real() * g.imag() + s.imag() * g.real());
    out[j] = {sd.real() * r.real() - sd.imag() * r.imag(), sd.real() * r.imag() + sd.imag() * r.real()};
  }
}

cplx series_sum(const cplx* coeffs, int mode_bound, cplx t) {
  const cplx wp = std::exp(cplx(0.0, 1.0) * t);
  const cplx wn = std::exp(cplx(0.0, -1.0) * t);
  const cplx* c0 = coeffs + mode_bound;
  // pos holds [w^k, w^{k+1}], neg holds [wn^{k+1}, wn^k] to pair with the
  // ascending coefficient pair [c_{-k-1}, c_{-k}].
  const cplx wp2 = wp * wp, wn2 = wn * wn;
  __m256d pos = _mm256_setr_pd(wp.real(), wp.imag(), wp2.real(), wp2.imag());
  __m256d neg = _mm256_setr_pd(wn2.real(), wn2.imag(), wn.real(), wn.imag());
  const __m256d step_p = bcast(wp2);
  const __m256d step_n = bcast(wn2);
  __m256d acc = _mm256_setzero_pd();
  int k = 1;
  for (; k + 1 <= mode_bound; k += 2) {
    acc = _mm256_add_pd(acc, cmul(load2(c0 + k), pos));
    acc = _mm256_add_pd(acc, cmul(load2(c0 - k - 1), neg));
    pos = cmul(pos, step_p);
    neg = cmul(neg, step_n);
  }
  cplx sum = hsum(acc) + c0[0];
  if (k == mode_bound) sum += c0[k] * lane(pos, 0) + c0[-k] * lane(neg, 1);
  return sum;
}

void dlp_row(const cplx* gamma, const cplx* dgamma, std::size_t n, std::size_t i, double w,
             double* row) {
  const __m256d gi = bcast(gamma[i]);
  const __m256d wv = _mm256_set1_pd(w);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d t0 = cmul(load2(dgamma + j), crecip(_mm256_sub_pd(load2(gamma + j), gi)));
    const __m256d t1 = cmul(load2(dgamma + j + 2), crecip(_mm256_sub_pd(load2(gamma + j + 2), gi)));
    // [im_j, im_{j+2}, im_{j+1}, im_{j+3}] -> ascending order.
    const __m256d im = _mm256_permute4x64_pd(_mm256_unpackhi_pd(t0, t1), 0xD8);
    _mm256_storeu_pd(row + j, _mm256_mul_pd(im, wv));
  }
  for (; j < n; ++j) {
    if (j == i) continue;
    const cplx d = gamma[j] - gamma[i];
    const double nrm = d.real() * d.real() + d.imag() * d.imag();
    const cplx g = dgamma[j];
    row[j] = (g.imag() * d.real() - g.real() * d.imag()) / nrm * w;
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{Isa::Avx2, "avx2", cauchy_sum, regularized_integrand, series_sum,
                                 dlp_row};
  return table;
}

}  // namespace trapzssq::simd
