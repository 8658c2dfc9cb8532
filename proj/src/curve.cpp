#include "trapzssq/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace trapzssq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI(0.0, 1.0);

std::vector<double> equispaced_nodes(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
  return t;
}

const std::vector<cplx>& checked(const std::vector<cplx>& gamma, const std::vector<cplx>& dgamma) {
  if (gamma.size() < 3) {
    throw Error(ErrorKind::InvalidDiscretization,
                "curve discretization needs at least 3 nodes, got " + std::to_string(gamma.size()));
  }
  if (dgamma.size() != gamma.size()) {
    throw Error(ErrorKind::InvalidDiscretization, "gamma and gamma' sample counts differ");
  }
  return gamma;
}

}  // namespace

Geometry starfish_geometry(int arms, double amplitude) {
  if (!(std::abs(amplitude) < 1.0)) {
    throw Error(ErrorKind::DegenerateCurve,
                "starfish amplitude must satisfy |amplitude| < 1, got " + std::to_string(amplitude));
  }
  if (arms < 0) throw Error(ErrorKind::DegenerateCurve, "starfish arm count must be nonnegative");
  const double n = arms;
  Geometry g;
  g.name = "starfish";
  g.position = [n, amplitude](cplx t) { return (1.0 + amplitude * std::cos(n * t)) * std::exp(kI * t); };
  g.derivative = [n, amplitude](cplx t) {
    return (-amplitude * n * std::sin(n * t) + kI * (1.0 + amplitude * std::cos(n * t))) * std::exp(kI * t);
  };
  return g;
}

Geometry circle_geometry(double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::DegenerateCurve, "circle radius must be positive");
  Geometry g;
  g.name = "circle";
  g.position = [radius](cplx t) { return radius * std::exp(kI * t); };
  g.derivative = [radius](cplx t) { return kI * radius * std::exp(kI * t); };
  return g;
}

Geometry ellipse_geometry(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::DegenerateCurve, "ellipse semi-axes must be positive");
  Geometry g;
  g.name = "ellipse";
  g.position = [a, b](cplx t) { return a * std::cos(t) + kI * b * std::sin(t); };
  g.derivative = [a, b](cplx t) { return -a * std::sin(t) + kI * b * std::cos(t); };
  return g;
}

CurveDiscretization::CurveDiscretization(std::vector<cplx> gamma, std::vector<cplx> dgamma)
    : nodes_(equispaced_nodes(checked(gamma, dgamma).size())),
      gamma_(std::move(gamma)),
      dgamma_(std::move(dgamma)),
      weight_(kTwoPi / static_cast<double>(gamma_.size())),
      extent_(0.0),
      gamma_series_(chop(fit_series(gamma_), kChopTolerance)),
      dgamma_series_(chop(fit_series(dgamma_), kChopTolerance)) {
  const std::size_t n = gamma_.size();
  speed_.resize(n);
  unit_nodes_.resize(n);
  double max_speed = 0.0;
  double area = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(gamma_[j].real()) || !std::isfinite(gamma_[j].imag()) ||
        !std::isfinite(dgamma_[j].real()) || !std::isfinite(dgamma_[j].imag())) {
      throw Error(ErrorKind::InvalidDiscretization, "non-finite curve sample at node " + std::to_string(j));
    }
    speed_[j] = std::abs(dgamma_[j]);
    max_speed = std::max(max_speed, speed_[j]);
    extent_ = std::max(extent_, std::abs(gamma_[j]));
    unit_nodes_[j] = std::polar(1.0, nodes_[j]);
    area += 0.5 * (std::conj(gamma_[j]) * dgamma_[j]).imag() * weight_;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(speed_[j] > 1e-12 * max_speed)) {
      throw Error(ErrorKind::DegenerateCurve, "parametrization speed vanishes at node " + std::to_string(j));
    }
  }
  if (!(area > 0.0)) {
    throw Error(ErrorKind::DegenerateCurve, "curve must be oriented counter-clockwise");
  }
}

CurveDiscretization discretize(const Geometry& geometry, std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidDiscretization,
                "curve discretization needs at least 3 nodes, got " + std::to_string(n));
  }
  std::vector<cplx> gamma(n), dgamma(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    gamma[j] = geometry.position(t);
    dgamma[j] = geometry.derivative(t);
  }
  return CurveDiscretization(std::move(gamma), std::move(dgamma));
}

CurveDiscretization make_starfish(std::size_t n, int n_arms, double amplitude) {
  return discretize(starfish_geometry(n_arms, amplitude), n);
}

CurveDiscretization make_circle(double radius, std::size_t n) { return discretize(circle_geometry(radius), n); }

CurveDiscretization make_ellipse(double a, double b, std::size_t n) {
  return discretize(ellipse_geometry(a, b), n);
}

std::size_t nearest_node(const CurveDiscretization& disc, cplx z) {
  const auto gamma = disc.gamma();
  std::size_t best = 0;
  double best_d = std::norm(gamma[0] - z);
  for (std::size_t j = 1; j < gamma.size(); ++j) {
    const double d = std::norm(gamma[j] - z);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

cplx discrete_winding(const CurveDiscretization& disc, cplx z) {
  cplx sum(0.0, 0.0);
  const auto gamma = disc.gamma();
  const auto dgamma = disc.dgamma();
  for (std::size_t j = 0; j < gamma.size(); ++j) sum += dgamma[j] / (gamma[j] - z);
  return sum * disc.weight() / (kTwoPi * kI);
}

Preimage find_preimage(const CurveDiscretization& disc, cplx z, NewtonOptions opts) {
  const auto gamma = disc.gamma();
  if (std::find(gamma.begin(), gamma.end(), z) != gamma.end()) {
    throw Error(ErrorKind::OnCurve, "target coincides with a quadrature node");
  }

  Preimage pre;
  cplx t(disc.nodes()[nearest_node(disc, z)], 0.0);
  const double target = opts.tol * disc.extent();

  for (int it = 0;; ++it) {
    const auto g = disc.gamma_series().try_eval(t);
    const auto dg = disc.dgamma_series().try_eval(t);
    if (!g || !dg) break;
    pre.residual = std::abs(*g - z);
    if (pre.residual <= target) {
      pre.converged = true;
      break;
    }
    if (it == opts.max_iter) break;
    const cplx step = (*g - z) / *dg;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > 1.0) break;
    t -= step;
    pre.iterations = it + 1;
  }

  double re = std::fmod(t.real(), kTwoPi);
  if (re < 0.0) re += kTwoPi;
  if (re >= kTwoPi) re = 0.0;
  pre.t_star = cplx(re, t.imag());
  pre.side = t.imag() > 0.0 ? Side::Interior : Side::Exterior;
  return pre;
}

}  // namespace trapzssq
