#include "trapzssq/bie.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trapzssq/simd/kernels.hpp"

namespace trapzssq {

DirichletProblem::DirichletProblem(CurveDiscretization d, std::vector<double> data)
    : disc(std::move(d)), boundary_data(std::move(data)) {
  if (boundary_data.size() != disc.n()) {
    throw Error(ErrorKind::InvalidDiscretization, "boundary data has " + std::to_string(boundary_data.size()) +
                                                     " values for " + std::to_string(disc.n()) + " nodes");
  }
}

Eigen::MatrixXd assemble_dlp_system(const CurveDiscretization& disc) {
  const std::size_t n = disc.n();
  const double w = disc.weight();
  const std::vector<cplx> d2gamma = sample_at_nodes(differentiate(disc.dgamma_series()));
  const auto& kernels = simd::active_kernels();

  // Row-major scratch row, copied into the column-major matrix.
  Eigen::MatrixXd m(n, n);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    kernels.dlp_row(disc.gamma().data(), disc.dgamma().data(), n, i, w, row.data());
    row[i] = (d2gamma[i] / (2.0 * disc.dgamma()[i])).imag() * w;
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
      row_sum += row[j];
    }
    if (!std::isfinite(row_sum) || std::abs(row_sum - std::numbers::pi) > 0.1 * std::numbers::pi) {
      throw Error(ErrorKind::Assembly, "double-layer row " + std::to_string(i) + " sums to " +
                                           std::to_string(row_sum) + " instead of pi");
    }
  }
  m.diagonal().array() += std::numbers::pi;
  return m;
}

DlpSolution solve_dirichlet(const DirichletProblem& problem) {
  const Eigen::MatrixXd m = assemble_dlp_system(problem.disc);
  const Eigen::Map<const Eigen::VectorXd> rhs(problem.boundary_data.data(),
                                              static_cast<Eigen::Index>(problem.boundary_data.size()));
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::VectorXd sigma = lu.solve(rhs);

  DlpSolution sol;
  const double rcond = lu.rcond();
  sol.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  const double rhs_norm = rhs.norm();
  sol.relative_residual = rhs_norm > 0.0 ? (m * sigma - rhs).norm() / rhs_norm : (m * sigma).norm();
  if (!sigma.allFinite() || !(sol.relative_residual <= 1e-12)) {
    throw Error(ErrorKind::Solver, "dense solve failed: relative residual " + std::to_string(sol.relative_residual) +
                                       ", condition estimate " + std::to_string(sol.condition_estimate));
  }
  sol.sigma.assign(sigma.data(), sigma.data() + sigma.size());
  return sol;
}

EvalReport eval_solution_report(const DlpSolution& sol, const CurveDiscretization& disc, cplx z, double tol,
                                Dispatch dispatch) {
  EvalReport r = eval_auto(disc, Density::from_real(sol.sigma), z, Kernel::cauchy(), tol, dispatch);
  r.value = r.value.imag();
  return r;
}

double eval_solution(const DlpSolution& sol, const CurveDiscretization& disc, cplx z, double tol, Dispatch dispatch) {
  return eval_solution_report(sol, disc, z, tol, dispatch).value.real();
}

}  // namespace trapzssq
