#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nmg/kernel.hpp"
#include "nmg/model.hpp"
#include "nmg/solver.hpp"
#include "nmg/verify.hpp"

namespace nmg {

enum class Mode { Nmc, Solve, Verify, MaxPrinciple, Stickiness };

const char* to_string(Mode m) noexcept;
Mode mode_from_string(const std::string& name);

struct RunConfig {
  Mode mode = Mode::Verify;
  // params
  double s = 0.5;
  double epsilon0 = 0.1;
  double eta = 0.1;
  double barrier_constant = 1.0;
  double d_scale = 1.0;         // multiplies the preset d (tampering experiments)
  // datum
  std::string datum = "paper";  // "paper" or "zero"
  double ramp_width = -1.0;     // negative: default_ramp_width
  double plateau_sign = 1.0;    // -1 flips the bump (violates the sign hypothesis)
  // grid, quadrature, solver
  int n_nodes = 257;
  QuadratureSpec quadrature;
  SolveConfig solve;
  std::vector<double> eta_sweep = {0.2, 0.1, 0.05, 0.025};
  std::string output_dir = "nmg_out";
  std::uint64_t seed = 1;

  void validate() const;
};

Params make_params(const RunConfig& cfg, double eta);
ExteriorDatum make_datum(const RunConfig& cfg, const Params& p);

struct NmcRow {
  double x;
  double u;
  double nmc;
  double error;
};

/// Pointwise curvature at the cell midpoints of the initial state u = 0.
std::vector<NmcRow> run_nmc(const RunConfig& cfg);

struct MaxPrincipleReport {
  SolveReport solve;
  double tol_odd = 0.0;
  double tol_sign = 0.0;
  double odd_defect = 0.0;     // max |u_i + u_mirror(i)|
  double min_left = 0.0;       // min u on nodes in [-d, 0]
  double max_right = 0.0;      // max u on nodes in [0, d]
  bool odd_ok = false;
  bool sign_ok = false;
  int violating_node = -1;     // first node breaking an assertion
  bool pass() const { return solve.converged && odd_ok && sign_ok; }
};

/// Solves with an odd datum that is nonpositive on (d, inf) and checks
/// oddness and the sign conditions. Throws PreconditionFailed otherwise.
MaxPrincipleReport run_maxprinciple(const RunConfig& cfg);

struct StickinessRow {
  double eta;
  double jump_proxy;         // u at the first interior node
  double theoretical_floor;  // eta^{(2+eps0)/(1-s)} / C_fit
  bool sign_ok;
  bool odd_ok;
  double residual;
  double min_left;           // min u over nodes in (-d, 0)
  bool converged;
};

struct StickinessReport {
  std::vector<StickinessRow> rows;
  double exponent = 0.0;      // (2+eps0)/(1-s)
  double c_fit = 0.0;
  double slack = 0.5;
  bool positive_ok = false;   // jump_proxy > 0 wherever eta > 0
  bool floor_ok = false;      // jump >= floor * (1 - slack) below the calibration point
  bool monotone_ok = false;   // jump nonincreasing as eta decreases
  // Jump proxy at the reference eta on the grid with (n+1)/2 nodes (twice the
  // spacing). Diagnostic only.
  double refine_eta = 0.0;
  double refine_coarse = 0.0;
  double refine_fine = 0.0;
  double refine_change = 0.0;
  bool refine_ok = false;
  bool pass() const;
};

StickinessReport run_stickiness(const RunConfig& cfg);

/// Every closed-form check on the preset built from cfg.
std::vector<IneqReport> run_verify(const RunConfig& cfg);

/// Tolerances of the maximum-principle assertions.
double odd_tolerance(bool symmetrized);
double sign_tolerance(double final_residual, double dx);

}  // namespace nmg
