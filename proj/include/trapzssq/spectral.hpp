#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trapzssq/error.hpp"

namespace trapzssq {

/// Largest admissible |Im t| * K for evaluating a series off the real axis.
/// Beyond this the terms reach ~e^600 and the continuation is meaningless.
inline constexpr double kSeriesOverflowGuard = 600.0;

/// Truncated 2pi-periodic Fourier series sum_{k=-K}^{K} c_k e^{ikt}.
///
/// Coefficients are stored ascending in k, so coeffs()[k + K] is mode k.
/// For data from an even number of samples N, K = N/2 and the Nyquist
/// coefficient is split equally between modes +N/2 and -N/2.
class FourierSeries {
 public:
  FourierSeries(std::vector<cplx> coeffs, std::size_t n_samples);

  int mode_bound() const noexcept { return mode_bound_; }
  std::size_t n_samples() const noexcept { return n_samples_; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of mode k; zero outside [-K, K].
  cplx coeff(int k) const noexcept;

  /// Evaluates the series, or returns nullopt if |Im t| * K exceeds the
  /// overflow guard.
  std::optional<cplx> try_eval(cplx t) const;

 private:
  std::vector<cplx> coeffs_;
  std::size_t n_samples_;
  int mode_bound_;
};

/// Interpolating series of samples at t_j = 2 pi j / N. Requires N >= 3.
FourierSeries fit_series(std::span<const cplx> samples);

/// Direct O(K) summation at a (possibly complex) argument.
/// Throws OutOfRange when the overflow guard is exceeded.
cplx eval_series(const FourierSeries& s, cplx t);

/// Term-wise derivative: coefficient k becomes i k c_k.
FourierSeries differentiate(const FourierSeries& s);

/// Drops the outermost modes whose magnitude is at most rel_tol * max|c_k|.
/// Off the real axis the roundoff in those modes is amplified by e^{|k Im t|},
/// so chopping them keeps the continuation usable further from the axis.
FourierSeries chop(const FourierSeries& s, double rel_tol);

/// Values of the series at its N originating nodes (inverse transform).
std::vector<cplx> sample_at_nodes(const FourierSeries& s);

struct ModeMagnitude {
  int k;
  double magnitude;
};

std::vector<ModeMagnitude> decay_profile(const FourierSeries& s);

/// Least-squares slope of log|c_k| against |k| over modes k in [k_lo, k_hi].
/// Modes with magnitude at or below `floor` are ignored. A series decaying
/// like e^{-a|k|} yields -a.
double decay_slope(std::span<const ModeMagnitude> profile, int k_lo, int k_hi, double floor = 0.0);

}  // namespace trapzssq
