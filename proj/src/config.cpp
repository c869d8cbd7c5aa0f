#include "nmg/config.hpp"

#include <fstream>

#include "nmg/error.hpp"

namespace nmg {

using nlohmann::json;

json to_json(const RunConfig& c) {
  return json{
      {"mode", to_string(c.mode)},
      {"params",
       {{"s", c.s},
        {"epsilon0", c.epsilon0},
        {"eta", c.eta},
        {"barrier_constant", c.barrier_constant},
        {"d_scale", c.d_scale}}},
      {"datum", {{"kind", c.datum}, {"ramp_width", c.ramp_width}, {"plateau_sign", c.plateau_sign}}},
      {"grid", {{"n_nodes", c.n_nodes}}},
      {"quadrature",
       {{"rel_tol", c.quadrature.rel_tol},
        {"abs_tol", c.quadrature.abs_tol},
        {"tail_radius", c.quadrature.tail_radius},
        {"singular_width", c.quadrature.singular_width}}},
      {"solve",
       {{"residual_tol", c.solve.residual_tol},
        {"max_iters", c.solve.max_iters},
        {"step0", c.solve.step0},
        {"step_shrink", c.solve.step_shrink},
        {"odd_symmetrize", c.solve.odd_symmetrize},
        {"boundary_exclude", c.solve.boundary_exclude}}},
      {"eta_sweep", c.eta_sweep},
      {"output_dir", c.output_dir},
      {"seed", c.seed},
  };
}

namespace {

template <class T>
void take(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void reject_unknown(const json& obj, const json& known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.contains(it.key())) fail(ErrorCode::InvalidArgument, "unknown config key '" + where + it.key() + "'");
}

}  // namespace

void merge_json(RunConfig& c, const json& j) {
  require(j.is_object(), "config must be a JSON object");
  const json known = to_json(c);
  reject_unknown(j, known, "");
  try {
    if (j.contains("mode")) c.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("params")) {
      const json& p = j.at("params");
      reject_unknown(p, known.at("params"), "params.");
      take(p, "s", c.s);
      take(p, "epsilon0", c.epsilon0);
      take(p, "eta", c.eta);
      take(p, "barrier_constant", c.barrier_constant);
      take(p, "d_scale", c.d_scale);
    }
    if (j.contains("datum")) {
      const json& d = j.at("datum");
      reject_unknown(d, known.at("datum"), "datum.");
      take(d, "kind", c.datum);
      take(d, "ramp_width", c.ramp_width);
      take(d, "plateau_sign", c.plateau_sign);
    }
    if (j.contains("grid")) {
      reject_unknown(j.at("grid"), known.at("grid"), "grid.");
      take(j.at("grid"), "n_nodes", c.n_nodes);
    }
    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      reject_unknown(q, known.at("quadrature"), "quadrature.");
      take(q, "rel_tol", c.quadrature.rel_tol);
      take(q, "abs_tol", c.quadrature.abs_tol);
      take(q, "tail_radius", c.quadrature.tail_radius);
      take(q, "singular_width", c.quadrature.singular_width);
    }
    if (j.contains("solve")) {
      const json& s = j.at("solve");
      reject_unknown(s, known.at("solve"), "solve.");
      take(s, "residual_tol", c.solve.residual_tol);
      take(s, "max_iters", c.solve.max_iters);
      take(s, "step0", c.solve.step0);
      take(s, "step_shrink", c.solve.step_shrink);
      take(s, "odd_symmetrize", c.solve.odd_symmetrize);
      take(s, "boundary_exclude", c.solve.boundary_exclude);
    }
    take(j, "eta_sweep", c.eta_sweep);
    take(j, "output_dir", c.output_dir);
    take(j, "seed", c.seed);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad config value: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig c;
  merge_json(c, j);
  return c;
}

std::string canonical_config(const RunConfig& cfg) { return to_json(cfg).dump(); }

}  // namespace nmg
