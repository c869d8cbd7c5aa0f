#pragma once

#include <vector>

#include <Eigen/Core>

#include "nmg/g_profile.hpp"
#include "nmg/galerkin.hpp"
#include "nmg/model.hpp"

namespace nmg {

struct SolveConfig {
  double residual_tol = 1e-7;  // sup over interior nodes of the hat-averaged curvature
  int max_iters = 2000;
  double step0 = 1.0;          // relative to the preconditioned step
  double step_shrink = 0.5;
  bool odd_symmetrize = true;
  int boundary_exclude = 2;    // nodes at each end left out of the sup

  void validate() const;
};

struct SolveReport {
  bool converged = false;
  int iters = 0;
  double final_residual = 0.0;          // interior sup
  double boundary_residual = 0.0;       // sup over the excluded nodes
  std::vector<double> residual_trace;   // interior sup after every accepted step
  Eigen::VectorXd residual;             // per node at the solution
  GridFunction solution;
};

/// Hat-averaged curvature at every node: (int phi_i H[u]) / dx.
Eigen::VectorXd residual(const GridFunction& u, FracOrder order, const GalerkinRule& rule = {});

/// Interior sup-norm used for convergence.
double interior_sup(const Eigen::VectorXd& r, int exclude);

/// Preconditioned descent on the graph energy,
///
///   u <- u - tau J0^{-1} grad I[u],
///
/// with J0 the Hessian at u = 0 (an upper bound for the Hessian anywhere).
/// A step is accepted when the interior sup-residual does not grow; otherwise
/// tau shrinks and the step is retried. After an accepted step tau recovers
/// towards step0. With an odd datum and odd_symmetrize, every iterate is made
/// exactly odd. Throws StalledStep when tau < 1e-12 step0.
SolveReport solve(const GridFunction& u_init, const SolveConfig& cfg, FracOrder order);

/// True iff max |u_i| <= cbar * eta + slack.
bool clamp_check(const SolveReport& report, const Params& p, double slack = 1e-8);

/// Replaces u_i by (u_i - u_mirror(i)) / 2.
Eigen::VectorXd odd_part(const Eigen::VectorXd& values);

}  // namespace nmg
