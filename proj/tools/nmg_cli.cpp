// Command-line driver: nmc, solve, verify, experiment-maxprinciple,
// experiment-stickiness. Precedence: config file < NMG_OUTPUT_DIR < flags.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmg/config.hpp"
#include "nmg/error.hpp"
#include "nmg/run.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<double> s, eta, epsilon0, residual_tol, d_scale, ramp_width, barrier;
  std::optional<int> n_nodes, max_iters;
  std::optional<std::string> output_dir, datum;
  std::optional<std::uint64_t> seed;
  std::vector<double> eta_sweep;
  bool no_symmetrize = false;
};

void add_options(CLI::App* app, Overrides& o) {
  app->add_option("-c,--config", o.config, "JSON config file");
  app->add_option("--s", o.s, "fractional order in (0, 1)");
  app->add_option("--eta", o.eta, "bump parameter eta >= 0");
  app->add_option("--epsilon0", o.epsilon0, "exponent parameter epsilon0 > 0");
  app->add_option("--barrier-constant", o.barrier, "stand-in for the barrier error constant C");
  app->add_option("--d-scale", o.d_scale, "multiply the preset half width d");
  app->add_option("--datum", o.datum, "paper or zero");
  app->add_option("--ramp-width", o.ramp_width, "datum ramp width (negative: default)");
  app->add_option("--n-nodes", o.n_nodes, "interior grid nodes");
  app->add_option("--residual-tol", o.residual_tol, "solver tolerance on the interior residual");
  app->add_option("--max-iters", o.max_iters, "solver iteration cap");
  app->add_option("--eta-sweep", o.eta_sweep, "strictly decreasing eta values")->delimiter(',');
  app->add_option("--output-dir", o.output_dir, "where results are written");
  app->add_option("--seed", o.seed, "seed for randomized checks");
  app->add_flag("--no-symmetrize", o.no_symmetrize, "do not enforce oddness after each step");
}

nmg::RunConfig resolve(nmg::Mode mode, const Overrides& o) {
  nmg::RunConfig c = o.config.empty() ? nmg::RunConfig{} : nmg::load_config(o.config);
  c.mode = mode;
  if (const char* env = std::getenv("NMG_OUTPUT_DIR"); env && *env) c.output_dir = env;
  if (o.s) c.s = *o.s;
  if (o.eta) c.eta = *o.eta;
  if (o.epsilon0) c.epsilon0 = *o.epsilon0;
  if (o.barrier) c.barrier_constant = *o.barrier;
  if (o.d_scale) c.d_scale = *o.d_scale;
  if (o.datum) c.datum = *o.datum;
  if (o.ramp_width) c.ramp_width = *o.ramp_width;
  if (o.n_nodes) c.n_nodes = *o.n_nodes;
  if (o.residual_tol) c.solve.residual_tol = *o.residual_tol;
  if (o.max_iters) c.solve.max_iters = *o.max_iters;
  if (!o.eta_sweep.empty()) c.eta_sweep = o.eta_sweep;
  if (o.output_dir) c.output_dir = *o.output_dir;
  if (o.seed) c.seed = *o.seed;
  if (o.no_symmetrize) c.solve.odd_symmetrize = false;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar nonlocal minimal graphs: curvature, solver, and inequality checks"};
  app.require_subcommand(1);
  Overrides o;
  const std::vector<std::pair<nmg::Mode, const char*>> modes = {
      {nmg::Mode::Nmc, "pointwise curvature of the initial graph"},
      {nmg::Mode::Solve, "solve for the discrete minimal graph"},
      {nmg::Mode::Verify, "closed-form inequality checks"},
      {nmg::Mode::MaxPrinciple, "oddness and sign of the solution"},
      {nmg::Mode::Stickiness, "jump proxy over an eta sweep"},
  };
  std::vector<std::pair<nmg::Mode, CLI::App*>> subs;
  for (const auto& [mode, help] : modes) {
    CLI::App* sub = app.add_subcommand(nmg::to_string(mode), help);
    add_options(sub, o);
    subs.emplace_back(mode, sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? nmg::kPass : nmg::kError;
  }
  try {
    for (const auto& [mode, sub] : subs)
      if (sub->parsed()) return nmg::execute(resolve(mode, o), std::cout);
  } catch (const nmg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nmg::kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nmg::kError;
  }
  return nmg::kError;
}
