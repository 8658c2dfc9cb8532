#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trapzssq/bie.hpp"
#include "trapzssq/curve.hpp"
#include "trapzssq/ssq.hpp"

// Drivers for the Laplace demo, the convergence study and the coefficient
// decay diagnostic. The CLI is a thin layer over these.

namespace trapzssq::experiments {

struct GeometrySpec {
  std::string name = "starfish";
  int arms = 5;
  double amplitude = 0.3;
  double radius = 1.0;
  double a = 2.0;
  double b = 1.0;

  /// Throws InvalidConfig for an unknown geometry name.
  Geometry build() const;
};

/// Test densities. Cubic is tau^3 + tau, Inverse is 1/tau and G1G2 is the
/// real density Re(gamma(t)) Im(gamma(t)).
enum class DensityKind { One, Cubic, Inverse, G1G2 };

DensityKind parse_density(std::string_view name);
std::string_view density_name(DensityKind kind);
Density sample_density(DensityKind kind, const CurveDiscretization& disc);

/// "log", "cauchy", "power2", "power3", ... and back.
Kernel parse_kernel(std::string_view name);
std::string kernel_name(Kernel kernel);

// Reference values. The power-law forms come from the residue theorem and
// are cross-checked against direct quadrature in the test suite.

/// I_m(z) for sigma = tau^3 + tau and z inside: 2 pi i sigma^{(m-1)}(z) / (m-1)!.
cplx cubic_interior_reference(cplx z, int m);
/// I_m(z) for sigma = 1/tau, z outside a curve enclosing 0: 2 pi i (-z)^{-m}.
cplx inverse_exterior_reference(cplx z, int m);
/// Adaptive Gauss-Kronrod value of int g1 g2 |gamma'| log|gamma - z| dt, with
/// the interval split at `center` (normally Re t*).
double g1g2_log_reference(const Geometry& geometry, cplx z, double center);

struct LaplaceDemoConfig {
  GeometrySpec geometry;
  std::size_t n = 400;
  std::size_t grid = 400;
  double tol = 1e-12;
  Dispatch dispatch = Dispatch::Auto;
};

struct LaplaceDemoRow {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
  double u_exact = 0.0;
  double abs_error = 0.0;
  Method method = Method::Trapezoidal;
  /// Inside the SSQ band, whether or not SSQ was used.
  bool near = false;
};

struct LaplaceDemoResult {
  std::vector<LaplaceDemoRow> rows;  // interior grid points only, row-major
  std::size_t grid_points = 0;
  double max_error_ssq = 0.0;
  double max_error_trapz = 0.0;
  double max_error_near = 0.0;
  double max_error_far = 0.0;
  double condition_estimate = 0.0;
};

/// Solves u = log|3 + 3i - z| on the boundary and evaluates the double layer
/// on a cell-centered grid over the curve's bounding box.
LaplaceDemoResult run_laplace_demo(const LaplaceDemoConfig& config);

enum class SideSelection { Interior, Exterior, Both };

struct ConvergenceConfig {
  GeometrySpec geometry;
  std::vector<std::size_t> n_values;
  Kernel kernel = Kernel::cauchy();
  SideSelection sides = SideSelection::Both;
  std::vector<double> d_list{0.01, 0.02, 0.04};
  std::size_t n_targets = 100;
  /// Random shift of each Re t* by up to +-jitter/2 target spacings.
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

struct ConvergenceRow {
  Kernel kernel;
  Side side = Side::Interior;
  double d = 0.0;
  std::size_t n = 0;
  double err_trapz = 0.0;
  double err_ssq = 0.0;
  /// Targets whose preimage did not converge; SSQ fell back to trapezoidal.
  std::size_t preimage_failures = 0;

  std::string flags() const;
};

/// Max absolute error of the trapezoidal rule and of SSQ over targets
/// z = gamma(t*), Im t* = +-d, for every (side, d, N).
std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& config);

/// Rate a of err ~ C e^{-a N}, least-squares over points with lo <= err <= hi.
/// NaN with fewer than two points in the window.
double fitted_rate(std::span<const std::pair<double, double>> n_err, double lo, double hi);

struct DecayConfig {
  GeometrySpec geometry;
  std::size_t n = 401;
  cplx t_star{1.0, 0.05};
  DensityKind density = DensityKind::Cubic;
};

struct DecayRow {
  int k = 0;
  double abs_chat = 0.0;  // Cauchy integrand sigma gamma' / (gamma - z)
  double abs_fhat = 0.0;  // regularized integrand
};

std::vector<DecayRow> run_decay(const DecayConfig& config);

}  // namespace trapzssq::experiments
