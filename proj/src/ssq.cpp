#include "trapzssq/ssq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trapzssq/simd/kernels.hpp"

namespace trapzssq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI(0.0, 1.0);

void require_off_axis(cplx t_star) {
  if (t_star.imag() == 0.0) {
    throw Error(ErrorKind::OnCurve, "preimage lies on the real axis (target on the curve)");
  }
}

void require_density_size(const CurveDiscretization& disc, std::size_t size) {
  if (size != disc.n()) {
    throw Error(ErrorKind::InvalidDensity, "density has " + std::to_string(size) +
                                                " values for a discretization with " +
                                                std::to_string(disc.n()) + " nodes");
  }
}

void require_off_nodes(const CurveDiscretization& disc, cplx z) {
  const auto g = disc.gamma();
  if (std::find(g.begin(), g.end(), z) != g.end()) {
    throw Error(ErrorKind::OnCurve, "target coincides with a quadrature node");
  }
}

void require_converged(const Preimage& pre) {
  if (!pre.converged) {
    throw Error(ErrorKind::ContractViolation, "singularity swap needs a converged preimage");
  }
}

cplx dot(const FourierSeries& fhat, const SsqWeights& w) {
  const auto c = fhat.coeffs();
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * w.values[i];
  return acc;
}

}  // namespace

Kernel Kernel::power(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidOrder, "kernel order must be >= 1, got " + std::to_string(m));
  if (m == 1) return cauchy();
  return {KernelKind::Power, m};
}

Density Density::from_real(std::span<const double> values) {
  Density d;
  d.values.assign(values.begin(), values.end());
  return d;
}

bool Density::is_real() const noexcept {
  return std::all_of(values.begin(), values.end(), [](cplx v) { return v.imag() == 0.0; });
}

std::vector<double> Density::real_values() const {
  if (!is_real()) throw Error(ErrorKind::InvalidDensity, "log kernel requires a real-valued density");
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](cplx v) { return v.real(); });
  return out;
}

SsqWeights pk_cauchy(cplx t_star, int mode_bound) {
  SsqWeights w = pk_power(t_star, mode_bound, 1);
  w.kernel = Kernel::cauchy();
  return w;
}

SsqWeights pk_power(cplx t_star, int mode_bound, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidOrder, "kernel order must be >= 1, got " + std::to_string(m));
  require_off_axis(t_star);
  SsqWeights w{Kernel::power(m), t_star, mode_bound,
               std::vector<cplx>(2 * static_cast<std::size_t>(mode_bound) + 1, cplx(0.0, 0.0))};
  const bool interior = t_star.imag() > 0.0;
  double factorial = 1.0;
  for (int j = 2; j < m; ++j) factorial *= j;

  for (int k = -mode_bound; k <= mode_bound; ++k) {
    double sign = 0.0;
    if (interior && k >= m) sign = 1.0;
    if (!interior && k <= 0) sign = -1.0;
    if (sign == 0.0) continue;
    double falling = 1.0;
    for (int j = 1; j < m; ++j) falling *= static_cast<double>(k - j);
    w.values[static_cast<std::size_t>(k + mode_bound)] =
        sign * kTwoPi * (falling / factorial) * std::exp(kI * static_cast<double>(k - m) * t_star);
  }
  return w;
}

SsqWeights qk_log(cplx t_star, int mode_bound) {
  require_off_axis(t_star);
  SsqWeights w{Kernel::log(), t_star, mode_bound,
               std::vector<cplx>(2 * static_cast<std::size_t>(mode_bound) + 1, cplx(0.0, 0.0))};
  auto at = [&](int k) -> cplx& { return w.values[static_cast<std::size_t>(k + mode_bound)]; };

  if (t_star.imag() < 0.0) {
    // Branch cut kept off the unit disc: only the pole at the origin counts.
    for (int k = -mode_bound; k < 0; ++k) at(k) = kTwoPi * std::exp(kI * static_cast<double>(k) * t_star) / static_cast<double>(k);
    at(0) = -kTwoPi * t_star.imag();
  } else {
    // Cut through xi = 1; the two sides of the cut contribute (zeta^k - 1) / k.
    for (int k = -mode_bound; k < 0; ++k) at(k) = kTwoPi / static_cast<double>(k);
    for (int k = 1; k <= mode_bound; ++k) {
      at(k) = (kTwoPi / static_cast<double>(k)) * (1.0 - std::exp(kI * static_cast<double>(k) * t_star));
    }
  }
  return w;
}

cplx eval_cauchy_trapz(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidOrder, "kernel order must be >= 1, got " + std::to_string(m));
  require_density_size(disc, sigma.size());
  require_off_nodes(disc, z);
  const cplx sum = simd::active_kernels().cauchy_sum(disc.gamma().data(), disc.dgamma().data(), sigma.data(),
                                                     disc.n(), z, m);
  return sum * disc.weight();
}

cplx eval_cauchy_ssq(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z, const Preimage& pre) {
  return eval_power_ssq(disc, sigma, z, pre, 1);
}

cplx eval_power_ssq(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z, const Preimage& pre,
                    int m) {
  if (m < 1) throw Error(ErrorKind::InvalidOrder, "kernel order must be >= 1, got " + std::to_string(m));
  require_converged(pre);
  require_off_axis(pre.t_star);
  require_density_size(disc, sigma.size());
  require_off_nodes(disc, z);

  const cplx zeta = std::exp(kI * pre.t_star);
  std::vector<cplx> f(disc.n());
  simd::active_kernels().regularized_integrand(disc.gamma().data(), disc.dgamma().data(), sigma.data(),
                                               disc.unit_nodes().data(), disc.n(), z, zeta, m, f.data());
  const FourierSeries fhat = fit_series(f);
  return dot(fhat, pk_power(pre.t_star, fhat.mode_bound(), m));
}

double eval_log_trapz(const CurveDiscretization& disc, std::span<const double> sigma, cplx z) {
  require_density_size(disc, sigma.size());
  require_off_nodes(disc, z);
  const auto gamma = disc.gamma();
  const auto speed = disc.speed();
  double acc = 0.0;
  for (std::size_t j = 0; j < disc.n(); ++j) acc += sigma[j] * speed[j] * 0.5 * std::log(std::norm(gamma[j] - z));
  return acc * disc.weight();
}

double eval_log_ssq(const CurveDiscretization& disc, std::span<const double> sigma, cplx z, const Preimage& pre) {
  require_converged(pre);
  require_off_axis(pre.t_star);
  require_density_size(disc, sigma.size());
  require_off_nodes(disc, z);

  const cplx zeta = std::exp(kI * pre.t_star);
  const auto gamma = disc.gamma();
  const auto speed = disc.speed();
  const auto xi = disc.unit_nodes();
  std::vector<cplx> f(disc.n());
  double regular = 0.0;
  for (std::size_t j = 0; j < disc.n(); ++j) {
    const double fj = sigma[j] * speed[j];
    f[j] = fj;
    regular += fj * 0.5 * std::log(std::norm(gamma[j] - z) / std::norm(xi[j] - zeta));
  }
  const FourierSeries fhat = fit_series(f);
  const cplx swapped = dot(fhat, qk_log(pre.t_star, fhat.mode_bound()));
  return regular * disc.weight() + swapped.real();
}

double ssq_band(std::size_t n, double tol) { return std::log(1.0 / tol) / static_cast<double>(n); }

EvalReport eval_auto(const CurveDiscretization& disc, const Density& sigma, cplx z, Kernel kernel, double tol,
                     Dispatch dispatch) {
  require_density_size(disc, sigma.values.size());
  if (kernel.kind != KernelKind::Log && kernel.order < 1) {
    throw Error(ErrorKind::InvalidOrder, "kernel order must be >= 1");
  }
  const Preimage pre = find_preimage(disc, z);

  EvalReport report;
  report.preimage_converged = pre.converged;
  report.iterations = pre.iterations;
  report.residual = pre.residual;
  if (pre.converged) report.im_tstar = pre.t_star.imag();

  bool use_ssq = pre.converged && pre.t_star.imag() != 0.0;
  if (dispatch == Dispatch::ForceTrapezoidal) use_ssq = false;
  if (dispatch == Dispatch::Auto) use_ssq = use_ssq && std::abs(pre.t_star.imag()) < ssq_band(disc.n(), tol);
  report.method = use_ssq ? Method::Ssq : Method::Trapezoidal;

  if (kernel.kind == KernelKind::Log) {
    const std::vector<double> real = sigma.real_values();
    report.value = use_ssq ? eval_log_ssq(disc, real, z, pre) : eval_log_trapz(disc, real, z);
  } else {
    report.value = use_ssq ? eval_power_ssq(disc, sigma.values, z, pre, kernel.order)
                           : eval_cauchy_trapz(disc, sigma.values, z, kernel.order);
  }
  return report;
}

}  // namespace trapzssq
