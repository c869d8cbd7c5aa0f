#include "nmg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nmg/error.hpp"

namespace nmg {

const char* to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Nmc: return "nmc";
    case Mode::Solve: return "solve";
    case Mode::Verify: return "verify";
    case Mode::MaxPrinciple: return "experiment-maxprinciple";
    case Mode::Stickiness: return "experiment-stickiness";
  }
  return "?";
}

Mode mode_from_string(const std::string& name) {
  for (Mode m : {Mode::Nmc, Mode::Solve, Mode::Verify, Mode::MaxPrinciple, Mode::Stickiness})
    if (name == to_string(m)) return m;
  fail(ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
}

void RunConfig::validate() const {
  (void)FracOrder{s};
  require(epsilon0 > 0.0 && eta >= 0.0 && barrier_constant > 0.0 && d_scale > 0.0, "invalid params");
  require(datum == "paper" || datum == "zero", "datum must be 'paper' or 'zero'");
  require(plateau_sign == 1.0 || plateau_sign == -1.0, "plateau_sign must be +1 or -1");
  require(n_nodes >= 3, "n_nodes must be at least 3");
  quadrature.validate();
  solve.validate();
  if (mode == Mode::Stickiness) {
    require(!eta_sweep.empty(), "eta_sweep must not be empty");
    for (std::size_t i = 0; i < eta_sweep.size(); ++i) {
      require(eta_sweep[i] >= 0.0, "eta_sweep entries must be nonnegative");
      if (i > 0) require(eta_sweep[i] < eta_sweep[i - 1], "eta_sweep must be strictly decreasing");
    }
  }
}

Params make_params(const RunConfig& cfg, double eta) {
  Params p = paper_params(FracOrder(cfg.s), cfg.epsilon0, eta, cfg.barrier_constant);
  if (cfg.d_scale != 1.0) p = with_half_width(p, cfg.d_scale * p.d);
  return p;
}

ExteriorDatum make_datum(const RunConfig& cfg, const Params& p) {
  if (cfg.datum == "zero") return zero_datum(p.d);
  ExteriorDatum u0 = paper_datum(p, cfg.ramp_width < 0.0 ? default_ramp_width(p) : cfg.ramp_width);
  u0.plateau_height *= cfg.plateau_sign;
  return u0;
}

double odd_tolerance(bool symmetrized) { return symmetrized ? 1e-8 : 1e-3; }
double sign_tolerance(double final_residual, double dx) { return 2.0 * final_residual * dx; }

std::vector<NmcRow> run_nmc(const RunConfig& cfg) {
  cfg.validate();
  const Params p = make_params(cfg, cfg.eta);
  const GridFunction u = GridFunction::zeros(cfg.n_nodes, make_datum(cfg, p));
  const PiecewiseLinear graph = u.to_piecewise_linear();
  std::vector<NmcRow> rows;
  for (int i = 0; i <= u.size(); ++i) {
    const double x = -u.half_width() + (i + 0.5) * u.spacing();
    const Estimate h = nmc_graph(graph, x, p.s, cfg.quadrature);
    rows.push_back({x, u(x), h.value, h.error});
  }
  return rows;
}

namespace {

void require_sign_hypothesis(const ExteriorDatum& u0) {
  if (!u0.is_odd()) fail(ErrorCode::PreconditionFailed, "datum must be odd");
  std::vector<double> probes = u0.knots();
  const std::size_t n = probes.size();
  for (std::size_t i = 0; i + 1 < n; ++i) probes.push_back(0.5 * (probes[i] + probes[i + 1]));
  for (double x : probes)
    if (x > u0.d && eval_datum(u0, x) > 0.0)
      fail(ErrorCode::PreconditionFailed, "datum must be nonpositive on (d, inf)");
}

struct SignCheck {
  double odd_defect = 0.0;
  double min_left = std::numeric_limits<double>::infinity();
  double max_right = -std::numeric_limits<double>::infinity();
  int violating = -1;
  bool odd_ok = false;
  bool sign_ok = false;
};

SignCheck sign_check(const GridFunction& u, double tol_odd, double tol_sign) {
  SignCheck c;
  const auto& v = u.values();
  for (int i = 0; i < u.size(); ++i) {
    const double defect = std::abs(v[i] + v[u.mirror(i)]);
    c.odd_defect = std::max(c.odd_defect, defect);
    bool bad = defect > tol_odd;
    if (u.node(i) <= 0.0) {
      c.min_left = std::min(c.min_left, v[i]);
      bad = bad || v[i] < -tol_sign;
    }
    if (u.node(i) >= 0.0) {
      c.max_right = std::max(c.max_right, v[i]);
      bad = bad || v[i] > tol_sign;
    }
    if (bad && c.violating < 0) c.violating = i;
  }
  c.odd_ok = c.odd_defect <= tol_odd;
  c.sign_ok = c.min_left >= -tol_sign && c.max_right <= tol_sign;
  return c;
}

SolveReport solve_preset(const RunConfig& cfg, double eta, int n_nodes) {
  const Params p = make_params(cfg, eta);
  const ExteriorDatum u0 = make_datum(cfg, p);
  return solve(GridFunction::zeros(n_nodes, u0), cfg.solve, p.s);
}

}  // namespace

MaxPrincipleReport run_maxprinciple(const RunConfig& cfg) {
  cfg.validate();
  const Params p = make_params(cfg, cfg.eta);
  require_sign_hypothesis(make_datum(cfg, p));
  auto solved = [&] {
    try {
      return solve_preset(cfg, cfg.eta, cfg.n_nodes);
    } catch (const Error& e) {
      fail(ErrorCode::SolverFailed, e.what());
    }
  };
  MaxPrincipleReport rep{solved()};
  const GridFunction& u = rep.solve.solution;
  rep.tol_odd = odd_tolerance(cfg.solve.odd_symmetrize);
  rep.tol_sign = sign_tolerance(rep.solve.final_residual, u.spacing());
  const SignCheck c = sign_check(u, rep.tol_odd, rep.tol_sign);
  rep.odd_defect = c.odd_defect;
  rep.min_left = c.min_left;
  rep.max_right = c.max_right;
  rep.odd_ok = c.odd_ok;
  rep.sign_ok = c.sign_ok;
  rep.violating_node = c.violating;
  return rep;
}

bool StickinessReport::pass() const {
  bool rows_ok = true;
  for (const auto& r : rows) rows_ok = rows_ok && r.converged && r.sign_ok && r.odd_ok;
  return rows_ok && positive_ok && floor_ok && monotone_ok;
}

StickinessReport run_stickiness(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.mode = Mode::Stickiness;
  c.validate();
  StickinessReport rep;
  rep.exponent = (2.0 + c.epsilon0) / (1.0 - c.s);
  const double tol_odd = odd_tolerance(c.solve.odd_symmetrize);

  for (double eta : c.eta_sweep) {
    StickinessRow row{eta, 0.0, 0.0, false, false, 0.0, 0.0, false};
    try {
      const SolveReport s = solve_preset(c, eta, c.n_nodes);
      const GridFunction& u = s.solution;
      const SignCheck chk = sign_check(u, tol_odd, sign_tolerance(s.final_residual, u.spacing()));
      row.jump_proxy = u.values()[0];
      row.residual = s.final_residual;
      row.converged = s.converged;
      row.sign_ok = chk.sign_ok;
      row.odd_ok = chk.odd_ok;
      double lo = std::numeric_limits<double>::infinity();
      for (int i = 0; i < u.size(); ++i)
        if (u.node(i) < 0.0) lo = std::min(lo, u.values()[i]);
      row.min_left = lo;
    } catch (const Error&) {
      row.jump_proxy = std::numeric_limits<double>::quiet_NaN();
      row.residual = std::numeric_limits<double>::quiet_NaN();
    }
    rep.rows.push_back(row);
  }

  const StickinessRow& top = rep.rows.front();
  rep.c_fit = top.eta > 0.0 && top.jump_proxy > 0.0 ? std::pow(top.eta, rep.exponent) / top.jump_proxy
                                                    : std::numeric_limits<double>::infinity();
  rep.positive_ok = true;
  rep.floor_ok = true;
  rep.monotone_ok = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    StickinessRow& r = rep.rows[i];
    r.theoretical_floor = std::pow(r.eta, rep.exponent) / rep.c_fit;
    if (r.eta > 0.0 && !(r.jump_proxy > 0.0)) rep.positive_ok = false;
    if (r.eta == 0.0 && r.jump_proxy != 0.0) rep.positive_ok = false;
    if (i > 0 && !(r.jump_proxy >= r.theoretical_floor * (1.0 - rep.slack))) rep.floor_ok = false;
    // Nonincreasing as eta decreases, up to the solver tolerance.
    if (i > 0 && !(r.jump_proxy <= rep.rows[i - 1].jump_proxy + c.solve.residual_tol)) rep.monotone_ok = false;
  }

  // Jump proxy on the grid with half the resolution at the reference eta.
  const auto it = std::find(c.eta_sweep.begin(), c.eta_sweep.end(), 0.1);
  const std::size_t ref = it == c.eta_sweep.end() ? 0 : static_cast<std::size_t>(it - c.eta_sweep.begin());
  rep.refine_eta = rep.rows[ref].eta;
  rep.refine_fine = rep.rows[ref].jump_proxy;
  const int coarse_n = (c.n_nodes + 1) / 2;
  if (rep.refine_eta > 0.0 && coarse_n >= 3) {
    try {
      rep.refine_coarse = solve_preset(c, rep.refine_eta, coarse_n).solution.values()[0];
    } catch (const Error&) {
      rep.refine_coarse = std::numeric_limits<double>::quiet_NaN();
    }
    rep.refine_change = std::abs(rep.refine_fine - rep.refine_coarse) / std::abs(rep.refine_coarse);
    rep.refine_ok = rep.refine_change < 0.2;
  }
  return rep;
}

std::vector<IneqReport> run_verify(const RunConfig& cfg) {
  cfg.validate();
  const Params p = make_params(cfg, cfg.eta);
  const QuadratureSpec& q = cfg.quadrature;
  std::vector<IneqReport> out;
  out.push_back(check_ks_geop(p));

  const ExteriorDatum indicator = paper_datum(p, 0.0);
  const double mass = datum_mass_integral(indicator, p, q);
  out.push_back(make_report("datum_mass_indicator", mass, Relation::Equal, 1.6 * p.eta, 1e-6 * 1.6 * p.eta));
  out.push_back(make_report("datum_mass_exceeds_eta", mass, Relation::GreaterEq, p.eta, 0.0));
  const ExteriorDatum ramped = paper_datum(p, default_ramp_width(p));
  out.push_back(make_report("datum_mass_ramped", datum_mass_integral(ramped, p, q), Relation::GreaterEq, mass,
                            1e-9 * mass));

  out.push_back(b_tail_integral(p, q));
  IneqReport worst = bump_b_bound(p, -p.d + p.d0, q, p.delta());
  worst.name = "bump_b_bound_worst";
  out.push_back(worst);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  IneqReport sweep = make_report("bump_b_bound_sweep", 0.0, Relation::LessEq, 0.0, 0.0);
  sweep.pass = true;
  sweep.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double x = -p.d + p.d0 * (1.0 - unit(rng));  // in (-d, -d+d0]
    const IneqReport r = bump_b_bound(p, x, q, p.delta() * unit(rng));
    if (r.margin < sweep.margin) {
      sweep.lhs = r.lhs;
      sweep.rhs = r.rhs;
      sweep.margin = r.margin;
      sweep.tolerance = r.tolerance;
    }
    sweep.pass = sweep.pass && r.pass;
  }
  out.push_back(sweep);

  const Point pt(-p.d + 0.5 * p.d0, 0.0);
  IneqReport a = bump_a_lower(p, pt, indicator, q);
  out.push_back(a);
  out.push_back(distance_envelope(p, pt, indicator, cfg.seed));
  out.push_back(net_curvature_margin(p, cfg.barrier_constant, p.delta()));

  // Reflection identity on random triples with x >= 0 >= p.
  double worst_defect = 0.0;
  int reversed = 0;
  for (int i = 0; i < 10000; ++i) {
    const Point X(10.0 * unit(rng), 20.0 * unit(rng) - 10.0);
    const Point P(-10.0 * unit(rng), 20.0 * unit(rng) - 10.0);
    const double scale = (X - P).squaredNorm() + 4.0 * std::abs(X.x() * P.x()) + X.squaredNorm() + P.squaredNorm();
    worst_defect = std::max(worst_defect, std::abs(reflect_identity_defect(X, P)) / scale);
    if (!check_reflect(X, P)) ++reversed;
  }
  out.push_back(make_report("reflect_identity", worst_defect, Relation::LessEq,
                            8.0 * std::numeric_limits<double>::epsilon(), 0.0));
  out.push_back(make_report("reflect_inequality_failures", reversed, Relation::LessEq, 0.0, 0.0));
  return out;
}

}  // namespace nmg
