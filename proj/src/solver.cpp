#include "nmg/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "nmg/error.hpp"

namespace nmg {

void SolveConfig::validate() const {
  require(residual_tol > 0.0, "residual_tol must be positive");
  require(step_shrink > 0.0 && step_shrink < 1.0, "step_shrink must lie in (0, 1)");
  require(step0 > 0.0 && max_iters >= 0 && boundary_exclude >= 0, "invalid solver settings");
}

Eigen::VectorXd residual(const GridFunction& u, FracOrder order, const GalerkinRule& rule) {
  return energy_gradient(u, order, rule) / u.spacing();
}

double interior_sup(const Eigen::VectorXd& r, int exclude) {
  const int n = static_cast<int>(r.size());
  if (n <= 2 * exclude) return r.cwiseAbs().maxCoeff();
  return r.segment(exclude, n - 2 * exclude).cwiseAbs().maxCoeff();
}

Eigen::VectorXd odd_part(const Eigen::VectorXd& values) { return 0.5 * (values - values.reverse()); }

namespace {

double boundary_sup(const Eigen::VectorXd& r, int exclude) {
  const int n = static_cast<int>(r.size());
  const int k = std::min(exclude, n / 2);
  if (k == 0) return 0.0;
  return std::max(r.head(k).cwiseAbs().maxCoeff(), r.tail(k).cwiseAbs().maxCoeff());
}

}  // namespace

SolveReport solve(const GridFunction& u_init, const SolveConfig& cfg, FracOrder order) {
  cfg.validate();
  const bool symmetrize = cfg.odd_symmetrize && u_init.datum().is_odd();
  GridFunction u = symmetrize ? u_init.with_values(odd_part(u_init.values())) : u_init;
  Eigen::VectorXd r = residual(u, order);
  double sup = interior_sup(r, cfg.boundary_exclude);

  const Eigen::LLT<Eigen::MatrixXd> precond(linearized_stiffness(u.size(), u.spacing(), order));
  if (precond.info() != Eigen::Success) fail(ErrorCode::SolverFailed, "preconditioner is not positive definite");

  SolveReport rep{false, 0, sup, 0.0, {sup}, r, u};
  double tau = cfg.step0;
  while (sup > cfg.residual_tol && rep.iters < cfg.max_iters) {
    // The preconditioner acts on the gradient, i.e. the residual times dx.
    const Eigen::VectorXd dir = precond.solve(r * u.spacing());
    for (;;) {
      Eigen::VectorXd next = u.values() - tau * dir;
      if (symmetrize) next = odd_part(next);
      GridFunction trial = u.with_values(std::move(next));
      Eigen::VectorXd rt = residual(trial, order);
      const double st = interior_sup(rt, cfg.boundary_exclude);
      if (st <= sup) {
        u = std::move(trial);
        r = std::move(rt);
        sup = st;
        tau = std::min(cfg.step0, tau / cfg.step_shrink);
        break;
      }
      tau *= cfg.step_shrink;
      if (tau < 1e-12 * cfg.step0) fail(ErrorCode::StalledStep, "step size underflow");
    }
    ++rep.iters;
    rep.residual_trace.push_back(sup);
  }
  rep.converged = sup <= cfg.residual_tol;
  rep.final_residual = sup;
  rep.boundary_residual = boundary_sup(r, cfg.boundary_exclude);
  rep.residual = std::move(r);
  rep.solution = std::move(u);
  return rep;
}

bool clamp_check(const SolveReport& report, const Params& p, double slack) {
  return report.solution.values().cwiseAbs().maxCoeff() <= p.plateau() + slack;
}

}  // namespace nmg
