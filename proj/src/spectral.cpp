#include "trapzssq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "trapzssq/simd/kernels.hpp"

namespace trapzssq {

FourierSeries::FourierSeries(std::vector<cplx> coeffs, std::size_t n_samples)
    : coeffs_(std::move(coeffs)), n_samples_(n_samples), mode_bound_(0) {
  if (coeffs_.size() % 2 == 0) {
    throw Error(ErrorKind::InvalidDiscretization,
                "Fourier series needs an odd number of coefficients, got " +
                    std::to_string(coeffs_.size()));
  }
  mode_bound_ = static_cast<int>(coeffs_.size() / 2);
}

cplx FourierSeries::coeff(int k) const noexcept {
  if (k < -mode_bound_ || k > mode_bound_) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k + mode_bound_)];
}

std::optional<cplx> FourierSeries::try_eval(cplx t) const {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) return std::nullopt;
  if (std::abs(t.imag()) * mode_bound_ > kSeriesOverflowGuard) return std::nullopt;
  return simd::active_kernels().series_sum(coeffs_.data(), mode_bound_, t);
}

FourierSeries fit_series(std::span<const cplx> samples) {
  const std::size_t n = samples.size();
  if (n < 3) {
    throw Error(ErrorKind::InvalidDiscretization,
                "fit_series needs at least 3 samples, got " + std::to_string(n));
  }
  std::vector<cplx> raw(n);
  detail::dft_forward(samples, raw);
  const double scale = 1.0 / static_cast<double>(n);

  const int K = static_cast<int>(n / 2);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(K) + 1);
  // raw[k mod n] -> mode k
  for (int k = -K; k <= K; ++k) {
    const auto idx = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
    coeffs[static_cast<std::size_t>(k + K)] = raw[idx] * scale;
  }
  if (n % 2 == 0) {
    coeffs.front() *= 0.5;
    coeffs.back() *= 0.5;
  }
  return FourierSeries(std::move(coeffs), n);
}

cplx eval_series(const FourierSeries& s, cplx t) {
  if (auto v = s.try_eval(t)) return *v;
  throw Error(ErrorKind::OutOfRange,
              "series evaluation at Im t = " + std::to_string(t.imag()) +
                  " exceeds the overflow guard for K = " + std::to_string(s.mode_bound()));
}

FourierSeries differentiate(const FourierSeries& s) {
  const int K = s.mode_bound();
  std::vector<cplx> out(s.coeffs().begin(), s.coeffs().end());
  for (int k = -K; k <= K; ++k) out[static_cast<std::size_t>(k + K)] *= cplx(0.0, k);
  return FourierSeries(std::move(out), s.n_samples());
}

FourierSeries chop(const FourierSeries& s, double rel_tol) {
  const int K = s.mode_bound();
  double peak = 0.0;
  for (cplx c : s.coeffs()) peak = std::max(peak, std::abs(c));
  const double floor = rel_tol * peak;
  int keep = K;
  while (keep > 0 && std::abs(s.coeff(keep)) <= floor && std::abs(s.coeff(-keep)) <= floor) --keep;
  std::vector<cplx> out(s.coeffs().begin() + (K - keep), s.coeffs().end() - (K - keep));
  return FourierSeries(std::move(out), s.n_samples());
}

std::vector<cplx> sample_at_nodes(const FourierSeries& s) {
  const std::size_t n = s.n_samples();
  const int K = s.mode_bound();
  std::vector<cplx> modal(n, cplx(0.0, 0.0));
  // Modes outside the sampled band alias onto k mod n.
  for (int k = -K; k <= K; ++k) {
    const int ni = static_cast<int>(n);
    modal[static_cast<std::size_t>(((k % ni) + ni) % ni)] += s.coeff(k);
  }
  std::vector<cplx> values(n);
  detail::dft_backward(modal, values);
  return values;
}

std::vector<ModeMagnitude> decay_profile(const FourierSeries& s) {
  const int K = s.mode_bound();
  std::vector<ModeMagnitude> out;
  out.reserve(s.coeffs().size());
  for (int k = -K; k <= K; ++k) out.push_back({k, std::abs(s.coeff(k))});
  return out;
}

double decay_slope(std::span<const ModeMagnitude> profile, int k_lo, int k_hi, double floor) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& m : profile) {
    if (m.k < k_lo || m.k > k_hi || !(m.magnitude > floor)) continue;
    const double x = std::abs(m.k);
    const double y = std::log(m.magnitude);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::nan("");
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nan("");
  return (count * sxy - sx * sy) / denom;
}

}  // namespace trapzssq
