#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trapzssq/error.hpp"
#include "trapzssq/spectral.hpp"

namespace trapzssq {

/// Analytic closed-curve parametrization over t in [0, 2pi). Both maps accept
/// complex t so references can be formed at a preimage off the real axis.
struct Geometry {
  std::string name;
  std::function<cplx(cplx)> position;
  std::function<cplx(cplx)> derivative;
};

/// (1 + amplitude cos(arms t)) e^{it}. Throws DegenerateCurve if |amplitude| >= 1.
Geometry starfish_geometry(int arms = 5, double amplitude = 0.3);
Geometry circle_geometry(double radius);
Geometry ellipse_geometry(double a, double b);

/// Trapezoidal-rule discretization of a closed, counter-clockwise curve.
///
/// Holds the samples gamma_j, gamma'_j at t_j = 2 pi j / N together with their
/// interpolating Fourier series (modes below roundoff chopped), the arc-length
/// speed |gamma'_j|, the common weight 2 pi / N and the unit-circle points
/// e^{i t_j}.
class CurveDiscretization {
 public:
  /// Relative magnitude below which trailing modes of the geometry series
  /// are treated as roundoff and dropped.
  static constexpr double kChopTolerance = 1e-15;

  /// Validates N >= 3, finite samples, nonvanishing speed and positive
  /// orientation.
  CurveDiscretization(std::vector<cplx> gamma, std::vector<cplx> dgamma);

  std::size_t n() const noexcept { return gamma_.size(); }
  double weight() const noexcept { return weight_; }
  /// max_j |gamma_j|; scales the Newton residual tolerance.
  double extent() const noexcept { return extent_; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const cplx> gamma() const noexcept { return gamma_; }
  std::span<const cplx> dgamma() const noexcept { return dgamma_; }
  std::span<const double> speed() const noexcept { return speed_; }
  std::span<const cplx> unit_nodes() const noexcept { return unit_nodes_; }

  const FourierSeries& gamma_series() const noexcept { return gamma_series_; }
  const FourierSeries& dgamma_series() const noexcept { return dgamma_series_; }

 private:
  std::vector<double> nodes_;
  std::vector<cplx> gamma_;
  std::vector<cplx> dgamma_;
  std::vector<double> speed_;
  std::vector<cplx> unit_nodes_;
  double weight_;
  double extent_;
  FourierSeries gamma_series_;
  FourierSeries dgamma_series_;
};

CurveDiscretization discretize(const Geometry& geometry, std::size_t n);
CurveDiscretization make_starfish(std::size_t n, int n_arms = 5, double amplitude = 0.3);
CurveDiscretization make_circle(double radius, std::size_t n);
CurveDiscretization make_ellipse(double a, double b, std::size_t n);

/// argmin_j |gamma_j - z|, smallest j on ties.
std::size_t nearest_node(const CurveDiscretization& disc, cplx z);

/// Discrete winding number (1 / 2 pi i) sum_j gamma'_j / (gamma_j - z) w.
/// Accurate only away from the curve.
cplx discrete_winding(const CurveDiscretization& disc, cplx z);

enum class Side { Interior, Exterior };

struct Preimage {
  cplx t_star;
  Side side = Side::Exterior;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
};

struct NewtonOptions {
  double tol = 1e-14;
  int max_iter = 50;
};

/// Complex root t* of gamma(t*) = z using Newton's method on the Fourier
/// series of gamma, started from the nearest node.
///
/// Stops once |gamma(t) - z| <= tol * extent(). A step longer than 1, a
/// non-finite iterate, or an argument outside the series overflow guard ends
/// the iteration with converged = false. Re t* is reduced to [0, 2pi).
/// Throws OnCurve if z coincides exactly with a node.
Preimage find_preimage(const CurveDiscretization& disc, cplx z, NewtonOptions opts = {});

}  // namespace trapzssq
