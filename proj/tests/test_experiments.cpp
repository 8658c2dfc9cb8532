#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "trapzssq/experiments.hpp"

using namespace trapzssq;
using namespace trapzssq::experiments;

TEST_CASE("cubic interior reference is the (m-1)th derivative") {
  // Check the residue form against direct quadrature of the layer integral.
  const cplx z = oracle::starfish(cplx(2.2, 0.3));
  REQUIRE(oracle::starfish_contains(z));
  for (int m = 1; m <= 3; ++m) {
    const cplx q = oracle::layer_integral([](double t) { const cplx g = oracle::starfish(t); return g * g * g + g; },
                                          [](double t) { return oracle::starfish(t); },
                                          [](double t) { return oracle::starfish_derivative(t); }, z, m);
    CHECK(std::abs(cubic_interior_reference(z, m) - q) < 1e-11 * std::max(1.0, std::abs(q)));
  }
  // Closed forms: 2 pi i (z^3 + z), 2 pi i (3 z^2 + 1), 2 pi i 3 z.
  const cplx w(0.2, -0.1);
  const cplx tpi(0.0, 2.0 * std::numbers::pi);
  CHECK(std::abs(cubic_interior_reference(w, 1) - tpi * (w * w * w + w)) < 1e-15);
  CHECK(std::abs(cubic_interior_reference(w, 2) - tpi * (3.0 * w * w + 1.0)) < 1e-15);
  CHECK(std::abs(cubic_interior_reference(w, 3) - tpi * 3.0 * w) < 1e-15);
}

TEST_CASE("inverse exterior reference carries the (-1)^m sign") {
  const cplx z = oracle::starfish(cplx(0.9, -0.3));
  REQUIRE_FALSE(oracle::starfish_contains(z));
  for (int m = 1; m <= 4; ++m) {
    const cplx q = oracle::layer_integral([](double t) { return 1.0 / oracle::starfish(t); },
                                          [](double t) { return oracle::starfish(t); },
                                          [](double t) { return oracle::starfish_derivative(t); }, z, m);
    CHECK(std::abs(inverse_exterior_reference(z, m) - q) < 1e-11);
    const cplx unsigned_form = cplx(0.0, 2.0 * std::numbers::pi) / std::pow(z, m);
    if (m % 2 == 1) CHECK(std::abs(unsigned_form - q) > 0.1 * std::abs(q));
  }
}

TEST_CASE("g1g2 log reference matches a refined periodic sum") {
  const Geometry star = starfish_geometry();
  for (cplx t : {cplx(1.0, 0.01), cplx(4.0, -0.02), cplx(2.5, 0.3)}) {
    const cplx z = star.position(t);
    const cplx q = oracle::periodic([&](double s) {
      const cplx g = oracle::starfish(s);
      return cplx(g.real() * g.imag() * std::abs(oracle::starfish_derivative(s)) * std::log(std::abs(g - z)), 0.0);
    });
    CHECK(std::abs(g1g2_log_reference(star, z, t.real()) - q.real()) < 1e-12);
  }
}

TEST_CASE("parsers") {
  CHECK(parse_kernel("log").kind == KernelKind::Log);
  CHECK(parse_kernel("cauchy").kind == KernelKind::Cauchy);
  CHECK(parse_kernel("power1").kind == KernelKind::Cauchy);
  CHECK(parse_kernel("power3").order == 3);
  CHECK(kernel_name(Kernel::power(2)) == "power2");
  CHECK(kernel_name(Kernel::log()) == "log");
  CHECK_THROWS_AS(parse_kernel("power0"), Error);
  CHECK_THROWS_AS(parse_kernel("gauss"), Error);
  CHECK(parse_density("cubic") == DensityKind::Cubic);
  CHECK_THROWS_AS(parse_density("quartic"), Error);
  GeometrySpec bad;
  bad.name = "triangle";
  CHECK_THROWS_AS(bad.build(), Error);
}

TEST_CASE("run_convergence layout and behaviour") {
  ConvergenceConfig c;
  c.n_values = {100, 200, 400};
  c.kernel = Kernel::cauchy();
  c.n_targets = 40;
  const auto rows = run_convergence(c);
  REQUIRE(rows.size() == 2 * 3 * 3);
  for (const auto& r : rows) {
    CHECK(r.preimage_failures == 0);
    CHECK(r.flags().empty());
    CHECK(std::isfinite(r.err_ssq));
    if (r.n == 400) CHECK(r.err_ssq < 1e-10);
    if (r.n == 400) CHECK(r.err_trapz > r.err_ssq);
  }
  // Order: side, then d, then N.
  CHECK(rows[0].side == Side::Interior);
  CHECK(rows[0].d == 0.01);
  CHECK(rows[1].n == 200);
  CHECK(rows.back().side == Side::Exterior);

  ConvergenceConfig bad = c;
  bad.n_values = {};
  CHECK_THROWS_AS(run_convergence(bad), Error);
  bad = c;
  bad.d_list = {-0.01};
  CHECK_THROWS_AS(run_convergence(bad), Error);
}

TEST_CASE("run_convergence is deterministic for a given seed") {
  ConvergenceConfig c;
  c.n_values = {120};
  c.kernel = Kernel::log();
  c.n_targets = 12;
  c.jitter = 0.5;
  c.seed = 9;
  const auto a = run_convergence(c);
  const auto b = run_convergence(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].err_ssq == b[i].err_ssq);
    CHECK(a[i].err_trapz == b[i].err_trapz);
  }
}

TEST_CASE("fitted_rate") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 100; n <= 1000; n += 100) pts.push_back({double(n), 3.0 * std::exp(-0.02 * n)});
  CHECK(fitted_rate(pts, 0.0, 1e300) == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(std::isnan(fitted_rate(pts, 1e-30, 1e-20)));
}

TEST_CASE("decay profile") {
  SUBCASE("circle with unit density: the regularized integrand is a single mode") {
    DecayConfig c;
    c.geometry.name = "circle";
    c.n = 64;
    c.density = DensityKind::One;
    c.t_star = cplx(0.7, 0.05);
    const auto rows = run_decay(c);
    REQUIRE(rows.size() == 65);
    for (const auto& r : rows) {
      if (r.k == 1) CHECK(r.abs_fhat == doctest::Approx(1.0));
      else CHECK(r.abs_fhat < 1e-14);
    }
  }

  SUBCASE("starfish: plain coefficients decay like e^{-Im t* |k|}") {
    DecayConfig c;
    const auto rows = run_decay(c);
    std::vector<ModeMagnitude> chat, fhat;
    for (const auto& r : rows) {
      chat.push_back({r.k, r.abs_chat});
      fhat.push_back({r.k, r.abs_fhat});
    }
    const double slow = decay_slope(chat, -150, -10, 1e-13);
    CHECK(slow == doctest::Approx(-0.05).epsilon(0.1));
    CHECK(decay_slope(fhat, -150, -10, 1e-13) < 3.0 * slow);
  }
}

namespace {

std::size_t interior_cells(std::size_t n, int grid) {
  const auto disc = make_starfish(n);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (cplx g : disc.gamma()) {
    xmin = std::min(xmin, g.real());
    xmax = std::max(xmax, g.real());
    ymin = std::min(ymin, g.imag());
    ymax = std::max(ymax, g.imag());
  }
  std::size_t inside = 0;
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const cplx z(xmin + (ix + 0.5) * (xmax - xmin) / grid, ymin + (iy + 0.5) * (ymax - ymin) / grid);
      if (oracle::starfish_contains(z)) ++inside;
    }
  }
  return inside;
}

}  // namespace

TEST_CASE("Laplace demo on a coarse grid") {
  LaplaceDemoConfig c;
  c.grid = 40;
  const auto result = run_laplace_demo(c);
  CHECK(result.grid_points == 1600);
  for (const auto& r : result.rows) {
    CHECK(oracle::starfish_contains(cplx(r.x, r.y)));
    CHECK(r.abs_error == std::abs(r.u - r.u_exact));
    if (r.near) CHECK(r.method == Method::Ssq);
  }
  // Every interior cell center of the node bounding box is reported.
  CHECK(interior_cells(400, 40) == result.rows.size());
  CHECK(result.max_error_ssq <= 1e-11);
  CHECK(result.condition_estimate > 1.0);

  c.dispatch = Dispatch::ForceTrapezoidal;
  const auto forced = run_laplace_demo(c);
  CHECK(forced.rows.size() == result.rows.size());
  for (const auto& r : forced.rows) CHECK(r.method == Method::Trapezoidal);
}

TEST_CASE("Laplace demo with N=100 on a 50x50 grid keeps exactly the interior cells") {
  LaplaceDemoConfig c;
  c.n = 100;
  c.grid = 50;
  const auto result = run_laplace_demo(c);
  CHECK(result.rows.size() == interior_cells(100, 50));
}
