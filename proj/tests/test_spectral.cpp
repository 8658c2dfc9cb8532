#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "trapzssq/experiments.hpp"
#include "trapzssq/spectral.hpp"

using namespace trapzssq;

namespace {

std::vector<cplx> sample(std::size_t n, auto f) {
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = f(oracle::kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return v;
}

// Random smooth periodic function: a few random modes plus exp(cos t).
auto random_smooth(std::mt19937& rng) {
  std::normal_distribution<double> g;
  std::vector<std::pair<int, cplx>> modes;
  for (int i = 0; i < 4; ++i) modes.emplace_back(static_cast<int>(rng() % 9) - 4, cplx(g(rng), g(rng)));
  const double a = g(rng);
  return [modes, a](double t) {
    cplx v = a * std::exp(std::cos(t));
    for (auto [k, c] : modes) v += c * std::exp(oracle::kI * static_cast<double>(k) * t);
    return v;
  };
}

}  // namespace

TEST_CASE("fit_series recovers single modes and constants") {
  const auto s = fit_series(sample(11, [](double t) { return std::exp(oracle::kI * t); }));
  CHECK(s.mode_bound() == 5);
  for (int k = -5; k <= 5; ++k) CHECK(std::abs(s.coeff(k) - (k == 1 ? cplx(1, 0) : cplx(0, 0))) < 1e-15);

  const auto c = fit_series(std::vector<cplx>(16, cplx(2.5, -1.0)));
  CHECK(c.mode_bound() == 8);
  for (int k = -8; k <= 8; ++k) CHECK(std::abs(c.coeff(k) - (k == 0 ? cplx(2.5, -1.0) : cplx(0, 0))) < 1e-15);
}

TEST_CASE("starfish coefficients are exactly modes -4, 1, 6") {
  // (1 + 0.3 cos 5t) e^{it} = e^{it} + 0.15 e^{6it} + 0.15 e^{-4it}
  const auto s = fit_series(sample(401, [](double t) { return oracle::starfish(t); }));
  for (int k = -200; k <= 200; ++k) {
    const cplx expected = k == 1 ? cplx(1, 0) : (k == 6 || k == -4) ? cplx(0.15, 0) : cplx(0, 0);
    CHECK(std::abs(s.coeff(k) - expected) < 1e-15);
  }
}

TEST_CASE("fit_series rejects fewer than three samples") {
  std::vector<cplx> two(2, cplx(1, 0));
  CHECK_THROWS_AS(fit_series(two), Error);
  try {
    fit_series(two);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDiscretization);
  }
}

TEST_CASE("eval_series at complex arguments") {
  const auto mode = fit_series(sample(11, [](double t) { return std::exp(oracle::kI * t); }));
  const cplx t(1.0, 0.05);
  CHECK(std::abs(eval_series(mode, t) - std::exp(-0.05) * std::exp(oracle::kI)) < 1e-15);

  const auto three = fit_series(std::vector<cplx>(7, cplx(3, 0)));
  CHECK(std::abs(eval_series(three, cplx(0.3, -0.7)) - cplx(3, 0)) < 1e-14);

  const auto star = fit_series(sample(401, [](double t) { return oracle::starfish(t); }));
  const cplx exact = oracle::starfish(t);
  CHECK(std::abs(eval_series(star, t) - exact) <= 1e-12 * std::abs(exact));
}

TEST_CASE("eval_series enforces the overflow guard") {
  const auto s = fit_series(std::vector<cplx>(401, cplx(1, 0)));  // K = 200
  CHECK_NOTHROW(eval_series(s, cplx(0.0, 2.9)));
  CHECK_THROWS_AS(eval_series(s, cplx(0.0, 3.1)), Error);
  CHECK_FALSE(s.try_eval(cplx(0.0, -3.1)).has_value());
}

TEST_CASE("differentiate") {
  const auto mode = fit_series(sample(11, [](double t) { return std::exp(oracle::kI * t); }));
  const auto d = differentiate(mode);
  CHECK(std::abs(d.coeff(1) - oracle::kI) < 1e-15);
  const auto dd = differentiate(d);
  CHECK(std::abs(eval_series(dd, cplx(0.4, 0)) + std::exp(oracle::kI * 0.4)) < 1e-14);

  const auto zero = differentiate(fit_series(std::vector<cplx>(9, cplx(4, 1))));
  for (cplx c : zero.coeffs()) CHECK(c == cplx(0, 0));

  SUBCASE("matches a centered finite difference on the starfish") {
    const auto star = fit_series(sample(401, [](double t) { return oracle::starfish(t); }));
    const auto ds = differentiate(star);
    const double t = 0.7, h = 1e-5;
    const cplx fd = (eval_series(star, t + h) - eval_series(star, t - h)) / (2 * h);
    CHECK(std::abs(eval_series(ds, t) - fd) < 1e-8);
  }
}

TEST_CASE("round trip, Parseval and conjugate symmetry on random smooth data") {
  std::mt19937 rng(1234);
  for (std::size_t n : {11u, 64u, 401u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_smooth(rng);
      const auto samples = sample(n, f);
      const auto s = fit_series(samples);
      double mean_sq = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double t = oracle::kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        CHECK(std::abs(eval_series(s, t) - samples[j]) <= 1e-13 * std::max(1.0, std::abs(samples[j])));
        mean_sq += std::norm(samples[j]) / static_cast<double>(n);
      }
      // With the split Nyquist pair, Parseval counts c_K + c_{-K} once.
      const int K = s.mode_bound();
      double energy = 0.0;
      for (int k = -K; k <= K; ++k) energy += std::norm(s.coeff(k));
      if (n % 2 == 0) energy += std::norm(s.coeff(K) + s.coeff(-K)) - std::norm(s.coeff(K)) - std::norm(s.coeff(-K));
      CHECK(std::abs(energy - mean_sq) <= 1e-12 * mean_sq);

      const auto nodes = sample_at_nodes(s);
      for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(nodes[j] - samples[j]) <= 1e-13 * std::max(1.0, std::abs(samples[j])));
    }
  }
}

TEST_CASE("real samples give conjugate-symmetric coefficients") {
  for (std::size_t n : {10u, 11u, 64u}) {
    const auto s = fit_series(sample(n, [](double t) { return cplx(std::exp(std::sin(2 * t)) + std::cos(t) * 0.3, 0.0); }));
    const int K = s.mode_bound();
    for (int k = 0; k <= K; ++k) CHECK(std::abs(s.coeff(-k) - std::conj(s.coeff(k))) < 1e-13);
  }
}

TEST_CASE("decay_profile") {
  const auto mode = fit_series(sample(11, [](double t) { return std::exp(2.0 * oracle::kI * t); }));
  const auto p = decay_profile(mode);
  CHECK(p.size() == 11);
  int nonzero = 0;
  for (const auto& m : p) nonzero += m.magnitude > 1e-15;
  CHECK(nonzero == 1);

  // Cauchy integrand on the starfish decays like e^{-|Im t*| |k|} on the slow side.
  const cplx t_star(1.0, 0.05);
  const cplx z = oracle::starfish(t_star);
  const auto integrand = fit_series(sample(401, [&](double t) { return 1.0 / (oracle::starfish(t) - z); }));
  const auto profile = decay_profile(integrand);
  const double slope = decay_slope(profile, -200, -1);
  CHECK(slope == doctest::Approx(-0.05).epsilon(0.1));
}

TEST_CASE("regularized integrand decays at a rate nearly independent of the distance") {
  experiments::DecayConfig far;
  far.t_star = cplx(1.0, 0.05);
  experiments::DecayConfig close = far;
  close.t_star = cplx(1.0, 0.005);
  auto slope = [](const experiments::DecayConfig& c) {
    std::vector<ModeMagnitude> p;
    for (const auto& r : experiments::run_decay(c)) p.push_back({r.k, r.abs_fhat});
    return decay_slope(p, -200, -1, 1e-14);
  };
  const double a = slope(far), b = slope(close);
  CHECK(a < 0.0);
  CHECK(b < 0.0);
  CHECK(std::max(a / b, b / a) < 2.0);
}
