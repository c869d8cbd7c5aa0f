// Acceptance run: one PASS/FAIL line per criterion with its wall time.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "graph_suite.hpp"
#include "nmg/error.hpp"
#include "nmg/experiments.hpp"
#include "nmg/kernel.hpp"
#include "nmg/perimeter.hpp"
#include "nmg/verify.hpp"

using namespace nmg;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string format(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome affine_zero() {
  QuadratureSpec q;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coef(-3.0, 3.0), point(-50.0, 50.0);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const auto u = PiecewiseLinear::affine(coef(rng), coef(rng));
    for (int i = 0; i < 20; ++i) worst = std::max(worst, std::abs(nmc_graph(u, point(rng), FracOrder(0.5), q).value));
  }
  return {worst <= 1e-6, format("max |H| = %.3g over 100 points", worst)};
}

Outcome graph_vs_set() {
  QuadratureSpec q;
  double worst = 0.0;  // |difference| / (3 * summed errors)
  bool ok = true;
  for (const auto& c : graph_suite()) {
    const Estimate g = nmc_graph(c.graph, c.x0, FracOrder(c.s), q);
    const Estimate b = nmc_set_bruteforce(RegionSet(c.graph), Point(c.x0, c.graph(c.x0)), FracOrder(c.s), q);
    const double diff = std::abs(g.value - b.value);
    const double allowed = 3.0 * (g.error + b.error);
    ok = ok && diff <= allowed;
    worst = std::max(worst, allowed > 0.0 ? diff / allowed : (diff > 0.0 ? INFINITY : 0.0));
  }
  return {ok, format("worst |diff| / (3 err) = %.3g on 5 graphs", worst)};
}

Outcome preset_constants() {
  bool ok = true;
  double min_theta = INFINITY;
  for (int k = 1; k <= 9; ++k) {
    const Params p = paper_params(FracOrder(0.1 * k), 0.1, 0.1);
    ok = ok && p.theta > 0.0 && check_ks_geop(p).pass;
    min_theta = std::min(min_theta, p.theta);
  }
  return {ok, format("min theta = %.6g over s = 0.1..0.9", min_theta)};
}

Outcome datum_mass() {
  double worst = 0.0;
  for (double s : {0.1, 0.5, 0.9}) {
    const Params p = paper_params(FracOrder(s), 0.1, 0.1);
    const double m = datum_mass_integral(paper_datum(p, 0.0), p, QuadratureSpec{});
    worst = std::max(worst, std::abs(m / (1.6 * p.eta) - 1.0));
  }
  return {worst <= 1e-6, format("max rel dev from 1.6 eta = %.3g", worst)};
}

Outcome b_bound() {
  const QuadratureSpec q;
  const Params p = paper_params(FracOrder(0.5), 0.1, 0.1);
  const IneqReport tail = b_tail_integral(p, q);
  const double rel = std::abs(tail.lhs / tail.rhs - 1.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool ok = rel <= 1e-6;
  double margin = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const IneqReport r = bump_b_bound(p, -p.d + p.d0 * (1.0 - unit(rng)), q, p.delta() * unit(rng));
    ok = ok && r.pass;
    margin = std::min(margin, r.margin / r.rhs);
  }
  return {ok, format("tail rel dev %.3g, min relative margin %.3g over 20 points", rel, margin)};
}

Outcome reflection() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Point x(10.0 * unit(rng), 20.0 * unit(rng) - 10.0);
    const Point pt(-10.0 * unit(rng), 20.0 * unit(rng) - 10.0);
    const double scale = (x - pt).squaredNorm() + x.squaredNorm() + pt.squaredNorm();
    worst = std::max(worst, std::abs(reflect_identity_defect(x, pt)) / scale);
  }
  return {worst <= 8.0 * std::numeric_limits<double>::epsilon(), format("max scaled defect %.3g", worst)};
}

RunConfig preset_run(Mode m) {
  RunConfig c;
  c.mode = m;
  return c;
}

Outcome max_principle() {
  const MaxPrincipleReport r = run_maxprinciple(preset_run(Mode::MaxPrinciple));
  return {r.pass() && r.odd_defect <= 1e-8,
          format("iters %d, residual %.3g, odd defect %.3g, min left %.3g (tol %.3g)", r.solve.iters,
                 r.solve.final_residual, r.odd_defect, r.min_left, r.tol_sign)};
}

Outcome stickiness() {
  const StickinessReport r = run_stickiness(preset_run(Mode::Stickiness));
  std::string rows;
  for (const auto& row : r.rows) rows += format(" %.3g:%.4g", row.eta, row.jump_proxy);
  bool signs = true;
  for (const auto& row : r.rows) signs = signs && row.sign_ok && row.odd_ok && row.converged;
  return {r.positive_ok && r.floor_ok && signs, format("eta:jump%s, C_fit %.4g", rows.c_str(), r.c_fit)};
}

Outcome minimality() {
  RunConfig cfg = preset_run(Mode::Solve);
  const Params p = make_params(cfg, cfg.eta);
  const ExteriorDatum u0 = make_datum(cfg, p);
  const FracOrder s = p.s;
  const QuadratureSpec q;
  const GridFunction ustar = solve(GridFunction::zeros(cfg.n_nodes, u0), cfg.solve, s).solution;
  const int n = ustar.size();
  const double dx = ustar.spacing();
  const double eps = 1e-3 * p.plateau();
  const double top = ustar.values().cwiseAbs().maxCoeff() + eps + 1.0;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> first(0, n - 21), width(3, 20);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double tol = 1e-9;
  double worst = -INFINITY;
  for (int k = 0; k < 10; ++k) {
    const int i0 = first(rng);
    const int w = width(rng);
    Eigen::VectorXd v = ustar.values();
    for (int i = i0; i < i0 + w; ++i) v[i] += eps * unit(rng);
    const EnergyWindow win{ustar.node(i0) - 1.5 * dx, ustar.node(i0 + w - 1) + 1.5 * dx, top};
    worst = std::max(worst, energy_delta(ustar, ustar.with_values(v), win, s, q));
  }
  // First-order change against the node residual at the initial state.
  const GridFunction u = GridFunction::zeros(n, u0);
  const Eigen::VectorXd r = residual(u, s);
  double rel = 0.0;
  for (int i : {0, 1, n / 4, n / 2 - 1, n - 1}) {
    Eigen::VectorXd up = u.values(), dn = u.values();
    up[i] += eps;
    dn[i] -= eps;
    const EnergyWindow win{u.node(i) - 1.5 * dx, u.node(i) + 1.5 * dx, top};
    const double slope = energy_delta(u.with_values(up), u.with_values(dn), win, s, q) / (2.0 * eps);
    rel = std::max(rel, std::abs(slope / (r[i] * dx) - 1.0));
  }
  return {worst <= tol && rel <= 0.3,
          format("max energy_delta %.3g (tol %.0e), max first-order rel dev %.3g", worst, tol, rel)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {"affine graphs have zero curvature", 10, affine_zero},
      {"graph curvature equals the set integral", 120, graph_vs_set},
      {"preset constants satisfy the geometric condition", 1, preset_constants},
      {"indicator datum mass is 1.6 eta", 5, datum_mass},
      {"B tail closed form and B bound", 60, b_bound},
      {"reflection identity", 1, reflection},
      {"maximum principle at N = 257", 300, max_principle},
      {"stickiness sweep", 1200, stickiness},
      {"minimality spot check", 600, minimality},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : all) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                secs, c.limit_s, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
