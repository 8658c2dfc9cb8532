#pragma once

#include <vector>

#include <Eigen/Dense>

#include "trapzssq/curve.hpp"
#include "trapzssq/ssq.hpp"

namespace trapzssq {

/// Interior Laplace Dirichlet problem with boundary values u_e(gamma_j).
struct DirichletProblem {
  CurveDiscretization disc;
  std::vector<double> boundary_data;

  DirichletProblem(CurveDiscretization d, std::vector<double> data);
};

struct DlpSolution {
  std::vector<double> sigma;
  /// Reciprocal-condition-based estimate of cond_1(M).
  double condition_estimate = 0.0;
  double relative_residual = 0.0;
};

/// Nystrom matrix pi I + A of the double-layer representation u = Im I_1,
/// A_ij = Im[gamma'_j / (gamma_j - gamma_i)] w and the curvature limit
/// Im[gamma''_i / (2 gamma'_i)] w on the diagonal.
/// Throws Assembly if the row sums of A are not pi (wrong orientation or an
/// unresolved curve).
Eigen::MatrixXd assemble_dlp_system(const CurveDiscretization& disc);

DlpSolution solve_dirichlet(const DirichletProblem& problem);

/// u(z) = Im I_1(z) for the solved density.
double eval_solution(const DlpSolution& sol, const CurveDiscretization& disc, cplx z,
                     double tol = 1e-12, Dispatch dispatch = Dispatch::Auto);

/// As eval_solution, but returns the full dispatch report.
EvalReport eval_solution_report(const DlpSolution& sol, const CurveDiscretization& disc, cplx z,
                                double tol = 1e-12, Dispatch dispatch = Dispatch::Auto);

}  // namespace trapzssq
