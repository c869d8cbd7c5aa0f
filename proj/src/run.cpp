#include "nmg/run.hpp"

#include <cmath>
#include <filesystem>

#include "nmg/config.hpp"
#include "nmg/error.hpp"
#include "nmg/output.hpp"

namespace nmg {
namespace {

using nlohmann::json;

std::string in_dir(const RunConfig& cfg, const char* name) {
  return (std::filesystem::path(cfg.output_dir) / name).string();
}

void write_summary(const RunConfig& cfg, bool pass, json results) {
  const std::string canon = canonical_config(cfg);
  json j{{"mode", to_string(cfg.mode)},
         {"config", to_json(cfg)},
         {"config_sha1", git_blob_sha1(canon)},
         {"pass", pass},
         {"results", std::move(results)}};
  write_text(in_dir(cfg, "summary.json"), j.dump(2) + "\n");
}

// JSON cannot hold inf or NaN; store them as strings.
json num(double v) { return std::isfinite(v) ? json(v) : json(fmt(v)); }

void write_solution(const RunConfig& cfg, const SolveReport& rep, const char* csv, const char* svg) {
  const GridFunction& u = rep.solution;
  std::vector<CsvRow> rows;
  for (int i = 0; i < u.size(); ++i)
    rows.push_back({fmt(u.node(i)), fmt(u.values()[i]), fmt(rep.residual[i]), fmt(u.values()[i] + u.values()[u.mirror(i)])});
  write_csv(in_dir(cfg, csv), {"x", "u", "residual", "odd_defect"}, rows);
  Series s;
  for (int i = 0; i < u.size(); ++i) {
    s.x.push_back(u.node(i));
    s.y.push_back(u.values()[i]);
  }
  s.label = "u";
  write_text(in_dir(cfg, svg), svg_plot({s}, "discrete s-minimal graph", "x", "u(x)"));

  std::vector<CsvRow> trace;
  for (std::size_t k = 0; k < rep.residual_trace.size(); ++k)
    trace.push_back({fmt(static_cast<int>(k)), fmt(rep.residual_trace[k])});
  write_csv(in_dir(cfg, "trace.csv"), {"iter", "residual"}, trace);
}

json solve_json(const SolveReport& r) {
  return {{"converged", r.converged},
          {"iters", r.iters},
          {"final_residual", num(r.final_residual)},
          {"boundary_residual", num(r.boundary_residual)}};
}

int run_nmc_mode(const RunConfig& cfg, std::ostream& log) {
  const auto rows = run_nmc(cfg);
  std::vector<CsvRow> out;
  for (const auto& r : rows) out.push_back({fmt(r.x), fmt(r.u), fmt(r.nmc), fmt(r.error)});
  write_csv(in_dir(cfg, "nmc.csv"), {"x", "u", "nmc", "error"}, out);
  write_summary(cfg, true, {{"points", rows.size()}});
  log << "nmc: " << rows.size() << " points\n";
  return kPass;
}

int run_solve_mode(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const Params p = make_params(cfg, cfg.eta);
  const SolveReport rep = solve(GridFunction::zeros(cfg.n_nodes, make_datum(cfg, p)), cfg.solve, p.s);
  write_solution(cfg, rep, "solution.csv", "solution.svg");
  json res = solve_json(rep);
  res["clamp_ok"] = clamp_check(rep, p);
  const bool pass = rep.converged && clamp_check(rep, p);
  write_summary(cfg, pass, res);
  log << "solve: converged=" << rep.converged << " iters=" << rep.iters << " residual=" << rep.final_residual << "\n";
  return pass ? kPass : kAssertionFailed;
}

int run_verify_mode(const RunConfig& cfg, std::ostream& log) {
  const auto reports = run_verify(cfg);
  std::vector<CsvRow> rows;
  bool pass = true;
  json res = json::array();
  for (const auto& r : reports) {
    rows.push_back({r.name, fmt(r.lhs), fmt(r.rhs), to_string(r.relation), fmt(r.margin), fmt(r.tolerance), fmt(r.pass)});
    res.push_back({{"name", r.name}, {"margin", num(r.margin)}, {"pass", r.pass}});
    pass = pass && r.pass;
    log << (r.pass ? "PASS " : "FAIL ") << r.name << "  lhs=" << r.lhs << " " << to_string(r.relation)
        << " rhs=" << r.rhs << "  margin=" << r.margin << "\n";
  }
  write_csv(in_dir(cfg, "verify.csv"), {"name", "lhs", "rhs", "relation", "margin", "tolerance", "pass"}, rows);
  write_summary(cfg, pass, res);
  return pass ? kPass : kAssertionFailed;
}

int run_maxprinciple_mode(const RunConfig& cfg, std::ostream& log) {
  const MaxPrincipleReport rep = run_maxprinciple(cfg);
  write_solution(cfg, rep.solve, "maxprinciple.csv", "maxprinciple.svg");
  json res = solve_json(rep.solve);
  res.update({{"tol_odd", num(rep.tol_odd)},
              {"tol_sign", num(rep.tol_sign)},
              {"odd_defect", num(rep.odd_defect)},
              {"min_left", num(rep.min_left)},
              {"max_right", num(rep.max_right)},
              {"odd_ok", rep.odd_ok},
              {"sign_ok", rep.sign_ok},
              {"violating_node", rep.violating_node}});
  write_summary(cfg, rep.pass(), res);
  log << "maxprinciple: odd_defect=" << rep.odd_defect << " min_left=" << rep.min_left
      << " max_right=" << rep.max_right << " tol_sign=" << rep.tol_sign << "\n";
  if (!rep.pass()) {
    log << "assertion failed";
    if (rep.violating_node >= 0) log << " at node " << rep.violating_node;
    log << "\n";
  }
  return rep.pass() ? kPass : kAssertionFailed;
}

int run_stickiness_mode(const RunConfig& cfg, std::ostream& log) {
  const StickinessReport rep = run_stickiness(cfg);
  std::vector<CsvRow> rows;
  Series measured{{}, {}, "log jump_proxy"};
  Series floor{{}, {}, "log floor"};
  for (const auto& r : rep.rows) {
    rows.push_back({fmt(r.eta), fmt(r.jump_proxy), fmt(r.theoretical_floor), fmt(r.sign_ok), fmt(r.odd_ok),
                    fmt(r.residual), fmt(r.min_left)});
    if (r.eta > 0.0) {
      measured.x.push_back(std::log(r.eta));
      measured.y.push_back(std::log(r.jump_proxy));
      floor.x.push_back(std::log(r.eta));
      floor.y.push_back(std::log(r.theoretical_floor));
    }
    log << "eta=" << r.eta << " jump_proxy=" << r.jump_proxy << " floor=" << r.theoretical_floor
        << " converged=" << r.converged << "\n";
  }
  write_csv(in_dir(cfg, "stickiness.csv"),
            {"eta", "jump_proxy", "theoretical_floor", "sign_ok", "odd_ok", "residual", "min_left"}, rows);
  write_text(in_dir(cfg, "stickiness.svg"), svg_plot({measured, floor}, "jump proxy vs eta", "log eta", "log u"));
  json res{{"exponent", num(rep.exponent)},   {"c_fit", num(rep.c_fit)},
           {"slack", num(rep.slack)},         {"positive_ok", rep.positive_ok},
           {"floor_ok", rep.floor_ok},        {"monotone_ok", rep.monotone_ok},
           {"refine_eta", num(rep.refine_eta)}, {"refine_coarse", num(rep.refine_coarse)},
           {"refine_fine", num(rep.refine_fine)}, {"refine_change", num(rep.refine_change)},
           {"refine_ok", rep.refine_ok}};
  write_summary(cfg, rep.pass(), res);
  log << "stickiness: C_fit=" << rep.c_fit << " floor_ok=" << rep.floor_ok << " positive_ok=" << rep.positive_ok
      << " refine_change=" << rep.refine_change << "\n";
  return rep.pass() ? kPass : kAssertionFailed;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  switch (cfg.mode) {
    case Mode::Nmc: return run_nmc_mode(cfg, log);
    case Mode::Solve: return run_solve_mode(cfg, log);
    case Mode::Verify: return run_verify_mode(cfg, log);
    case Mode::MaxPrinciple: return run_maxprinciple_mode(cfg, log);
    case Mode::Stickiness: return run_stickiness_mode(cfg, log);
  }
  return kError;
}

}  // namespace nmg
