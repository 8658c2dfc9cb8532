#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trapzssq/curve.hpp"
#include "trapzssq/error.hpp"

namespace trapzssq {

enum class KernelKind { Log, Cauchy, Power };

/// Layer-potential kernel: log|tau - z| |dtau|, or dtau / (tau - z)^order.
struct Kernel {
  KernelKind kind = KernelKind::Cauchy;
  int order = 1;

  static Kernel log() { return {KernelKind::Log, 0}; }
  static Kernel cauchy() { return {KernelKind::Cauchy, 1}; }
  /// Power(1) is normalized to Cauchy. Throws InvalidOrder for m < 1.
  static Kernel power(int m);

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

/// Layer density sampled at the discretization nodes.
struct Density {
  std::vector<cplx> values;

  static Density from_real(std::span<const double> values);
  bool is_real() const noexcept;
  /// Real parts; throws InvalidDensity if any imaginary part is nonzero.
  std::vector<double> real_values() const;
};

/// Analytic quadrature weights on the unit circle for modes k = -K..K.
struct SsqWeights {
  Kernel kernel;
  cplx t_star;
  int mode_bound = 0;
  std::vector<cplx> values;

  cplx at(int k) const { return values[static_cast<std::size_t>(k + mode_bound)]; }
};

/// p_k = int_0^{2pi} e^{ikt} / (e^{it} - e^{it*}) dt.
SsqWeights pk_cauchy(cplx t_star, int mode_bound);
/// p_k^m = (1/i) oint_{|xi|=1} xi^{k-1} / (xi - zeta)^m dxi with zeta = e^{it*}.
SsqWeights pk_power(cplx t_star, int mode_bound, int m);
/// q_k = int_0^{2pi} e^{ikt} log(e^{it} - e^{it*}) dt, real part only at k = 0.
SsqWeights qk_log(cplx t_star, int mode_bound);

/// Plain trapezoidal sum_j sigma_j gamma'_j / (gamma_j - z)^m w.
cplx eval_cauchy_trapz(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z, int m = 1);

/// Singularity-swapped Cauchy integral for a converged preimage.
cplx eval_cauchy_ssq(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z,
                     const Preimage& pre);

/// Singularity-swapped integral of sigma dtau / (tau - z)^m, m >= 1.
cplx eval_power_ssq(const CurveDiscretization& disc, std::span<const cplx> sigma, cplx z,
                    const Preimage& pre, int m);

/// Plain trapezoidal sum_j sigma_j |gamma'_j| log|gamma_j - z| w.
double eval_log_trapz(const CurveDiscretization& disc, std::span<const double> sigma, cplx z);

/// Log potential with the log|e^{it} - e^{it*}| part integrated against q_k.
double eval_log_ssq(const CurveDiscretization& disc, std::span<const double> sigma, cplx z,
                    const Preimage& pre);

enum class Method { Trapezoidal, Ssq };
enum class Dispatch { Auto, ForceTrapezoidal, ForceSsq };

struct EvalReport {
  cplx value;  // purely real for the log kernel
  Method method = Method::Trapezoidal;
  std::optional<double> im_tstar;
  bool preimage_converged = false;
  int iterations = 0;
  double residual = 0.0;
};

/// |Im t*| below which the trapezoidal error model e^{-N|Im t*|} exceeds tol.
double ssq_band(std::size_t n, double tol);

/// Finds the preimage of z and evaluates with SSQ when it converged and
/// |Im t*| < ssq_band(N, tol); otherwise uses the plain trapezoidal rule.
/// ForceSsq still falls back to the trapezoidal rule without a converged
/// preimage.
EvalReport eval_auto(const CurveDiscretization& disc, const Density& sigma, cplx z, Kernel kernel,
                     double tol = 1e-12, Dispatch dispatch = Dispatch::Auto);

}  // namespace trapzssq
