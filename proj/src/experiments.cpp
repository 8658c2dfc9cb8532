#include "trapzssq/experiments.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "parallel.hpp"

namespace trapzssq::experiments {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI(0.0, 1.0);

cplx ipow(cplx z, int p) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

cplx boundary_value_exact(cplx z) { return std::log(std::abs(cplx(3.0, 3.0) - z)); }

}  // namespace

Geometry GeometrySpec::build() const {
  if (name == "starfish") return starfish_geometry(arms, amplitude);
  if (name == "circle") return circle_geometry(radius);
  if (name == "ellipse") return ellipse_geometry(a, b);
  throw Error(ErrorKind::InvalidConfig, "unknown geometry '" + name + "' (expected starfish, circle or ellipse)");
}

DensityKind parse_density(std::string_view name) {
  if (name == "one") return DensityKind::One;
  if (name == "cubic") return DensityKind::Cubic;
  if (name == "inverse") return DensityKind::Inverse;
  if (name == "g1g2") return DensityKind::G1G2;
  throw Error(ErrorKind::InvalidConfig,
              "unknown density '" + std::string(name) + "' (expected one, cubic, inverse or g1g2)");
}

std::string_view density_name(DensityKind kind) {
  switch (kind) {
    case DensityKind::One: return "one";
    case DensityKind::Cubic: return "cubic";
    case DensityKind::Inverse: return "inverse";
    case DensityKind::G1G2: return "g1g2";
  }
  return "?";
}

Density sample_density(DensityKind kind, const CurveDiscretization& disc) {
  Density d;
  d.values.reserve(disc.n());
  for (const cplx tau : disc.gamma()) {
    switch (kind) {
      case DensityKind::One: d.values.emplace_back(1.0, 0.0); break;
      case DensityKind::Cubic: d.values.push_back(tau * tau * tau + tau); break;
      case DensityKind::Inverse: d.values.push_back(1.0 / tau); break;
      case DensityKind::G1G2: d.values.emplace_back(tau.real() * tau.imag(), 0.0); break;
    }
  }
  return d;
}

Kernel parse_kernel(std::string_view name) {
  if (name == "log") return Kernel::log();
  if (name == "cauchy") return Kernel::cauchy();
  if (name.starts_with("power")) {
    const std::string digits(name.substr(5));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int m = std::stoi(digits);
      if (m >= 1) return Kernel::power(m);
    }
  }
  throw Error(ErrorKind::InvalidConfig,
              "unknown kernel '" + std::string(name) + "' (expected log, cauchy or power<m>)");
}

std::string kernel_name(Kernel kernel) {
  switch (kernel.kind) {
    case KernelKind::Log: return "log";
    case KernelKind::Cauchy: return "cauchy";
    case KernelKind::Power: return "power" + std::to_string(kernel.order);
  }
  return "?";
}

cplx cubic_interior_reference(cplx z, int m) {
  // d^{m-1}/dz^{m-1} z^p / (m-1)! = C(p, m-1) z^{p-m+1}
  cplx sum(0.0, 0.0);
  for (int p : {3, 1}) {
    const int q = p - (m - 1);
    if (q >= 0) sum += binomial(p, m - 1) * ipow(z, q);
  }
  return kTwoPi * kI * sum;
}

cplx inverse_exterior_reference(cplx z, int m) { return kTwoPi * kI / ipow(-z, m); }

double g1g2_log_reference(const Geometry& geometry, cplx z, double center) {
  auto integrand = [&](double t) {
    const cplx g = geometry.position(t);
    const double speed = std::abs(geometry.derivative(t));
    return g.real() * g.imag() * speed * std::log(std::abs(g - z));
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double left = GK::integrate(integrand, center - std::numbers::pi, center, 15, 5e-14);
  const double right = GK::integrate(integrand, center, center + std::numbers::pi, 15, 5e-14);
  return left + right;
}

LaplaceDemoResult run_laplace_demo(const LaplaceDemoConfig& config) {
  if (config.grid < 1) throw Error(ErrorKind::InvalidConfig, "grid resolution must be positive");
  const Geometry geometry = config.geometry.build();
  CurveDiscretization disc = discretize(geometry, config.n);

  std::vector<double> data(disc.n());
  for (std::size_t j = 0; j < disc.n(); ++j) data[j] = boundary_value_exact(disc.gamma()[j]).real();
  const DirichletProblem problem(disc, std::move(data));
  const DlpSolution sol = solve_dirichlet(problem);
  const Density sigma = Density::from_real(sol.sigma);

  double xmin = disc.gamma()[0].real(), xmax = xmin, ymin = disc.gamma()[0].imag(), ymax = ymin;
  for (const cplx g : disc.gamma()) {
    xmin = std::min(xmin, g.real());
    xmax = std::max(xmax, g.real());
    ymin = std::min(ymin, g.imag());
    ymax = std::max(ymax, g.imag());
  }
  const std::size_t G = config.grid;
  const double hx = (xmax - xmin) / static_cast<double>(G);
  const double hy = (ymax - ymin) / static_cast<double>(G);
  const double band = ssq_band(disc.n(), config.tol);

  std::vector<std::vector<LaplaceDemoRow>> per_row(G);
  detail::parallel_for(G, [&](std::size_t iy) {
    const double y = ymin + (static_cast<double>(iy) + 0.5) * hy;
    for (std::size_t ix = 0; ix < G; ++ix) {
      const double x = xmin + (static_cast<double>(ix) + 0.5) * hx;
      const cplx z(x, y);
      const auto g = disc.gamma();
      if (std::find(g.begin(), g.end(), z) != g.end()) continue;

      const Preimage pre = find_preimage(disc, z);
      const bool near = pre.converged && pre.t_star.imag() != 0.0 && std::abs(pre.t_star.imag()) < band;
      // Inside the band the preimage side is reliable; outside it the plain
      // winding sum is.
      const bool interior = near ? pre.t_star.imag() > 0.0
                                 : std::abs(discrete_winding(disc, z) - cplx(1.0, 0.0)) < 0.5;
      if (!interior) continue;

      bool use_ssq = near;
      if (config.dispatch == Dispatch::ForceTrapezoidal) use_ssq = false;
      if (config.dispatch == Dispatch::ForceSsq) use_ssq = pre.converged && pre.t_star.imag() != 0.0;

      LaplaceDemoRow row;
      row.x = x;
      row.y = y;
      row.near = near;
      row.method = use_ssq ? Method::Ssq : Method::Trapezoidal;
      const cplx dlp = use_ssq ? eval_cauchy_ssq(disc, sigma.values, z, pre)
                               : eval_cauchy_trapz(disc, sigma.values, z);
      row.u = dlp.imag();
      row.u_exact = boundary_value_exact(z).real();
      row.abs_error = std::abs(row.u - row.u_exact);
      per_row[iy].push_back(row);
    }
  });

  LaplaceDemoResult result;
  result.grid_points = G * G;
  result.condition_estimate = sol.condition_estimate;
  for (auto& r : per_row) {
    for (const auto& row : r) {
      auto& by_method = row.method == Method::Ssq ? result.max_error_ssq : result.max_error_trapz;
      by_method = std::max(by_method, row.abs_error);
      auto& by_band = row.near ? result.max_error_near : result.max_error_far;
      by_band = std::max(by_band, row.abs_error);
    }
    result.rows.insert(result.rows.end(), r.begin(), r.end());
  }
  return result;
}

std::string ConvergenceRow::flags() const {
  if (preimage_failures == 0) return "";
  return "preimage_failures=" + std::to_string(preimage_failures);
}

std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& config) {
  if (config.n_values.empty()) throw Error(ErrorKind::InvalidConfig, "no node counts given");
  if (config.n_targets < 1) throw Error(ErrorKind::InvalidConfig, "need at least one target");
  for (double d : config.d_list) {
    if (!(d > 0.0)) throw Error(ErrorKind::InvalidConfig, "distances d must be positive");
  }
  for (std::size_t n : config.n_values) {
    if (n < 3) throw Error(ErrorKind::InvalidConfig, "node counts must be >= 3");
  }
  const Geometry geometry = config.geometry.build();
  const Kernel kernel = config.kernel;

  std::vector<Side> sides;
  if (config.sides != SideSelection::Exterior) sides.push_back(Side::Interior);
  if (config.sides != SideSelection::Interior) sides.push_back(Side::Exterior);

  const std::size_t nt = config.n_targets;
  std::vector<double> offsets(nt, 0.5);
  if (config.jitter > 0.0) {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (auto& o : offsets) o += config.jitter * u(rng);
  }

  std::vector<ConvergenceRow> rows;
  for (const Side side : sides) {
    const double sign = side == Side::Interior ? 1.0 : -1.0;
    const DensityKind density = kernel.kind == KernelKind::Log ? DensityKind::G1G2
                                : side == Side::Interior       ? DensityKind::Cubic
                                                               : DensityKind::Inverse;
    for (const double d : config.d_list) {
      std::vector<cplx> t_star(nt), z(nt), ref(nt);
      for (std::size_t i = 0; i < nt; ++i) {
        t_star[i] = cplx((static_cast<double>(i) + offsets[i]) * kTwoPi / static_cast<double>(nt), sign * d);
        z[i] = geometry.position(t_star[i]);
      }
      // References depend only on the target, so they are computed once per (side, d).
      detail::parallel_for(nt, [&](std::size_t i) {
        if (kernel.kind == KernelKind::Log) {
          ref[i] = g1g2_log_reference(geometry, z[i], t_star[i].real());
        } else if (side == Side::Interior) {
          ref[i] = cubic_interior_reference(z[i], kernel.order);
        } else {
          ref[i] = inverse_exterior_reference(z[i], kernel.order);
        }
      });

      for (const std::size_t n : config.n_values) {
        const CurveDiscretization disc = discretize(geometry, n);
        const Density sigma = sample_density(density, disc);
        const std::vector<double> sigma_real =
            kernel.kind == KernelKind::Log ? sigma.real_values() : std::vector<double>{};
        std::vector<double> err_trapz(nt), err_ssq(nt);
        std::vector<char> failed(nt, 0);
        detail::parallel_for(nt, [&](std::size_t i) {
          const Preimage pre = find_preimage(disc, z[i]);
          const bool ok = pre.converged && pre.t_star.imag() != 0.0;
          failed[i] = ok ? 0 : 1;
          if (kernel.kind == KernelKind::Log) {
            const double trapz = eval_log_trapz(disc, sigma_real, z[i]);
            const double ssq = ok ? eval_log_ssq(disc, sigma_real, z[i], pre) : trapz;
            err_trapz[i] = std::abs(trapz - ref[i].real());
            err_ssq[i] = std::abs(ssq - ref[i].real());
          } else {
            const cplx trapz = eval_cauchy_trapz(disc, sigma.values, z[i], kernel.order);
            const cplx ssq = ok ? eval_power_ssq(disc, sigma.values, z[i], pre, kernel.order) : trapz;
            err_trapz[i] = std::abs(trapz - ref[i]);
            err_ssq[i] = std::abs(ssq - ref[i]);
          }
        });
        ConvergenceRow row;
        row.kernel = kernel;
        row.side = side;
        row.d = d;
        row.n = n;
        row.err_trapz = *std::max_element(err_trapz.begin(), err_trapz.end());
        row.err_ssq = *std::max_element(err_ssq.begin(), err_ssq.end());
        row.preimage_failures = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
        rows.push_back(row);
      }
    }
  }
  return rows;
}

double fitted_rate(std::span<const std::pair<double, double>> n_err, double lo, double hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& [n, err] : n_err) {
    if (!(err >= lo && err <= hi)) continue;
    const double y = std::log(err);
    sx += n;
    sy += y;
    sxx += n * n;
    sxy += n * y;
    ++count;
  }
  if (count < 2) return std::nan("");
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nan("");
  return -(count * sxy - sx * sy) / denom;
}

std::vector<DecayRow> run_decay(const DecayConfig& config) {
  const Geometry geometry = config.geometry.build();
  const CurveDiscretization disc = discretize(geometry, config.n);
  const Density sigma = sample_density(config.density, disc);
  const cplx z = geometry.position(config.t_star);
  const cplx zeta = std::exp(kI * config.t_star);

  std::vector<cplx> plain(disc.n()), regular(disc.n());
  for (std::size_t j = 0; j < disc.n(); ++j) {
    const cplx base = sigma.values[j] * disc.dgamma()[j] / (disc.gamma()[j] - z);
    plain[j] = base;
    regular[j] = base * (disc.unit_nodes()[j] - zeta);
  }
  const FourierSeries chat = fit_series(plain);
  const FourierSeries fhat = fit_series(regular);

  std::vector<DecayRow> rows;
  for (int k = -chat.mode_bound(); k <= chat.mode_bound(); ++k) {
    rows.push_back({k, std::abs(chat.coeff(k)), std::abs(fhat.coeff(k))});
  }
  return rows;
}

}  // namespace trapzssq::experiments
