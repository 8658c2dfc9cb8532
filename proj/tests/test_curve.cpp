#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "trapzssq/curve.hpp"

using namespace trapzssq;

TEST_CASE("starfish discretization") {
  const auto disc = make_starfish(400);
  CHECK(disc.n() == 400);
  CHECK(disc.gamma()[0] == cplx(1.3, 0.0));
  CHECK(disc.weight() == doctest::Approx(oracle::kTwoPi / 400));
  CHECK(std::abs(discrete_winding(disc, cplx(0, 0)) - cplx(1, 0)) < 1e-6);
  for (double s : disc.speed()) CHECK(s > 0.0);

  const auto d2 = sample_at_nodes(differentiate(disc.gamma_series()));
  for (std::size_t j = 0; j < disc.n(); ++j) {
    CHECK(std::abs(d2[j] - disc.dgamma()[j]) <= 1e-10 * std::abs(disc.dgamma()[j]));
  }
}

TEST_CASE("zero amplitude starfish is the unit circle") {
  const auto disc = make_starfish(32, 5, 0.0);
  for (std::size_t j = 0; j < disc.n(); ++j) {
    CHECK(std::abs(disc.gamma()[j] - std::exp(oracle::kI * disc.nodes()[j])) < 1e-15);
  }
}

TEST_CASE("degenerate and invalid curves are rejected") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Io;
  };
  CHECK(kind_of([] { make_starfish(100, 5, 1.0); }) == ErrorKind::DegenerateCurve);
  CHECK(kind_of([] { make_circle(1.0, 2); }) == ErrorKind::InvalidDiscretization);
  CHECK(kind_of([] { make_circle(-1.0, 10); }) == ErrorKind::DegenerateCurve);

  // Clockwise parametrization.
  std::vector<cplx> g(16), dg(16);
  for (int j = 0; j < 16; ++j) {
    const double t = oracle::kTwoPi * j / 16;
    g[j] = std::exp(-oracle::kI * t);
    dg[j] = -oracle::kI * g[j];
  }
  CHECK(kind_of([&] { CurveDiscretization(g, dg); }) == ErrorKind::DegenerateCurve);
}

TEST_CASE("circle and ellipse") {
  const auto circle = make_circle(1.0, 50);
  for (double s : circle.speed()) CHECK(s == doctest::Approx(1.0));

  const auto e11 = make_ellipse(1.0, 1.0, 50);
  for (std::size_t j = 0; j < 50; ++j) CHECK(std::abs(e11.gamma()[j] - circle.gamma()[j]) < 1e-15);

  // Perimeter of the (2, 1) ellipse by adaptive quadrature of the arclength.
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double perimeter = GK::integrate(
      [](double t) { return std::hypot(2.0 * std::sin(t), std::cos(t)); }, 0.0, oracle::kTwoPi, 15, 1e-14);
  CHECK(perimeter == doctest::Approx(9.688448).epsilon(1e-7));
  const auto ellipse = make_ellipse(2.0, 1.0, 200);
  double sum = 0.0;
  for (double s : ellipse.speed()) sum += s * ellipse.weight();
  CHECK(std::abs(sum - perimeter) < 1e-12);
}

TEST_CASE("nearest_node") {
  CHECK(nearest_node(make_circle(1.0, 20), cplx(1.1, 0)) == 0);
  CHECK(nearest_node(make_circle(1.0, 4), cplx(0, 0.9)) == 1);

  const auto disc = make_starfish(400);
  const cplx z = oracle::starfish(cplx(1.0, 0.05));
  std::size_t brute = 0;
  for (std::size_t j = 1; j < 400; ++j) {
    if (std::abs(disc.gamma()[j] - z) < std::abs(disc.gamma()[brute] - z)) brute = j;
  }
  CHECK(brute == 64);
  CHECK(nearest_node(disc, z) == 64);
}

TEST_CASE("find_preimage on the unit circle matches theta - i ln r") {
  const auto disc = make_circle(1.0, 64);
  const auto inside = find_preimage(disc, 0.9 * std::exp(oracle::kI * 0.4));
  CHECK(inside.converged);
  CHECK(inside.side == Side::Interior);
  CHECK(std::abs(inside.t_star - cplx(0.4, std::log(1.0 / 0.9))) < 1e-13);
  CHECK(inside.residual <= 1e-14 * disc.extent());

  const auto outside = find_preimage(disc, cplx(1.25, 0));
  CHECK(outside.converged);
  CHECK(outside.side == Side::Exterior);
  CHECK(std::abs(outside.t_star - cplx(0.0, -std::log(1.25))) < 1e-13);
}

TEST_CASE("find_preimage inverts the starfish series") {
  const auto disc = make_starfish(401);
  const cplx t(1.0, 0.02);
  const auto pre = find_preimage(disc, eval_series(disc.gamma_series(), t));
  CHECK(pre.converged);
  CHECK(pre.iterations <= 10);
  CHECK(std::abs(pre.t_star - t) < 1e-10);
}

TEST_CASE("find_preimage round trip on random targets") {
  const auto disc = make_starfish(401);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(0.0, oracle::kTwoPi), im(0.005, 0.1);
  for (int i = 0; i < 100; ++i) {
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    const cplx t(re(rng), sign * im(rng));
    const cplx z = oracle::starfish(t);
    const auto pre = find_preimage(disc, z);
    REQUIRE(pre.converged);
    CHECK(pre.residual <= 1e-14 * disc.extent());
    CHECK(std::abs(pre.t_star - t) < 1e-9);
    CHECK((pre.side == Side::Interior) == oracle::starfish_contains(z));
  }
}

TEST_CASE("find_preimage edge cases") {
  const auto disc = make_starfish(100);
  CHECK_THROWS_AS(find_preimage(disc, disc.gamma()[17]), Error);

  // Far away the continuation is unusable; the solver must say so or at
  // least not claim a small residual it does not have.
  const auto far = find_preimage(disc, cplx(40.0, 25.0));
  if (far.converged) {
    CHECK(far.residual <= 1e-14 * disc.extent());
  }
  CHECK(far.t_star.real() >= 0.0);
  CHECK(far.t_star.real() < oracle::kTwoPi);
}
