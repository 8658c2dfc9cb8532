#include <cmath>

#include "trapzssq/simd/kernels.hpp"

// Complex arithmetic is spelled out on real/imag parts: it matches the AVX2
// code path operation for operation and skips the NaN/Inf recovery of the
// library complex multiply and divide.

namespace trapzssq::simd {
namespace {

struct C {
  double re, im;
};

inline C load(const cplx& z) { return {z.real(), z.imag()}; }
inline C mul(C a, C b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline C sub(C a, C b) { return {a.re - b.re, a.im - b.im}; }
inline C recip(C a) {
  const double n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}
inline C pow_int(C a, int m) {
  C r = a;
  for (int p = 1; p < m; ++p) r = mul(r, a);
  return r;
}

cplx cauchy_sum(const cplx* gamma, const cplx* dgamma, const cplx* sigma, std::size_t n, cplx z,
                int m) {
  const C zc = load(z);
  double acc_re = 0.0, acc_im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const C q = pow_int(recip(sub(load(gamma[j]), zc)), m);
    const C t = mul(mul(load(sigma[j]), load(dgamma[j])), q);
    acc_re += t.re;
    acc_im += t.im;
  }
  return {acc_re, acc_im};
}

void regularized_integrand(const cplx* gamma, const cplx* dgamma, const cplx* sigma,
                           const cplx* xi, std::size_t n, cplx z, cplx zeta, int m, cplx* out) {
  const C zc = load(z);
  const C zetac = load(zeta);
  for (std::size_t j = 0; j < n; ++j) {
    const C ratio = mul(sub(load(xi[j]), zetac), recip(sub(load(gamma[j]), zc)));
    const C t = mul(mul(load(sigma[j]), load(dgamma[j])), pow_int(ratio, m));
    out[j] = {t.re, t.im};
  }
}

cplx series_sum(const cplx* coeffs, int mode_bound, cplx t) {
  const cplx w_pos = std::exp(cplx(0.0, 1.0) * t);
  const cplx w_neg = std::exp(cplx(0.0, -1.0) * t);
  const C wp = load(w_pos), wn = load(w_neg);
  const cplx* c0 = coeffs + mode_bound;
  C acc = load(c0[0]);
  C pp = wp, pn = wn;
  for (int k = 1; k <= mode_bound; ++k) {
    const C a = mul(load(c0[k]), pp);
    const C b = mul(load(c0[-k]), pn);
    acc.re += a.re + b.re;
    acc.im += a.im + b.im;
    pp = mul(pp, wp);
    pn = mul(pn, wn);
  }
  return {acc.re, acc.im};
}

void dlp_row(const cplx* gamma, const cplx* dgamma, std::size_t n, std::size_t i, double w,
             double* row) {
  const C gi = load(gamma[i]);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const C t = mul(load(dgamma[j]), recip(sub(load(gamma[j]), gi)));
    row[j] = t.im * w;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, "scalar", cauchy_sum, regularized_integrand,
                                 series_sum, dlp_row};
  return table;
}

}  // namespace trapzssq::simd
