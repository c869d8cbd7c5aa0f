#include "nmg/model.hpp"

#include <algorithm>
#include <cmath>

#include "nmg/error.hpp"

namespace nmg {

double geometric_margin(double s, double cbar, double d, double d0, double h) {
  const double a = std::pow(h, 2.0 + s) / std::pow(h * h + 2.0, 0.5 * (2.0 + s));
  const double b = 2.0 * cbar / ((1.0 + s) * std::pow(d - d0, 1.0 + s));
  return a - b;
}

Params Params::make(FracOrder s, double epsilon0, double cbar, double d, double d0, double h, double eta,
                    double cstar, double d1, double d2) {
  require(epsilon0 > 0.0, "epsilon0 must be positive");
  require(cbar > 0.0 && cstar > 0.0, "cbar and cstar must be positive");
  require(d0 > 0.0 && d > d0 && h > 0.0, "need d > d0 > 0 and h > 0");
  require(eta >= 0.0 && std::isfinite(eta), "eta must be finite and nonnegative");
  require(d2 > d1 && d1 > 0.0, "need d2 > d1 > 0");
  Params p;
  p.s = s;
  p.epsilon0 = epsilon0;
  p.cbar = cbar;
  p.d = d;
  p.d0 = d0;
  p.h = h;
  p.eta = eta;
  p.cstar = cstar;
  p.d1 = d1;
  p.d2 = d2;
  p.theta = geometric_margin(s.value(), cbar, d, d0, h);
  return p;
}

Params paper_params(FracOrder order, double epsilon0, double eta, double barrier_constant) {
  require(barrier_constant > 0.0, "barrier constant must be positive");
  const double s = order.value();
  const double cbar = std::pow(2.0, 2.0 + s) * (1.0 + s);
  const double d = std::pow(3.0, (2.0 + s) / (2.0 * (1.0 + s))) * std::pow(2.0, (3.0 + s) / (1.0 + s)) + 2.0;
  const double d1 = 2.0 * (std::pow(10.0 / 9.0, 1.0 / (1.0 + s)) - 1.0);
  const double d2 = 2.0 * (std::pow(10.0, 1.0 / (1.0 + s)) - 1.0);
  const double theta = geometric_margin(s, cbar, d, 1.0, 1.0);
  return Params::make(order, epsilon0, cbar, d, 1.0, 1.0, eta, 4.0 * barrier_constant / theta, d1, d2);
}

Params with_half_width(const Params& p, double d) {
  return Params::make(p.s, p.epsilon0, p.cbar, d, p.d0, p.h, p.eta, p.cstar, p.d1, p.d2);
}

namespace {

// The negative-side trapezoid.
double bump(const ExteriorDatum& u0, double x) {
  const double r = u0.ramp_width;
  if (x < u0.support_lo - r || x > u0.support_hi + r) return 0.0;
  if (x < u0.support_lo) return u0.plateau_height * (x - (u0.support_lo - r)) / r;
  if (x > u0.support_hi) return u0.plateau_height * ((u0.support_hi + r) - x) / r;
  return u0.plateau_height;
}

}  // namespace

double eval_datum(const ExteriorDatum& u0, double x) {
  if (u0.plateau_height == 0.0) return 0.0;
  if (x < 0.0) return bump(u0, x);
  if (x > 0.0 && u0.odd_extension) return -bump(u0, -x);
  return 0.0;
}

std::vector<double> ExteriorDatum::knots() const {
  if (plateau_height == 0.0) return {};
  std::vector<double> k = {support_lo - ramp_width, support_lo, support_hi, support_hi + ramp_width};
  if (odd_extension)
    for (int i = 3; i >= 0; --i) k.push_back(-k[i]);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

ExteriorDatum zero_datum(double d) {
  require(d > 0.0, "half width must be positive");
  ExteriorDatum u0;
  u0.d = d;
  u0.support_lo = u0.support_hi = -d;
  return u0;
}

double default_ramp_width(const Params& p) { return 0.5 * p.d1; }

ExteriorDatum paper_datum(const Params& p, double ramp_width) {
  require(ramp_width >= 0.0 && std::isfinite(ramp_width), "ramp width must be finite and nonnegative");
  ExteriorDatum u0;
  u0.d = p.d;
  u0.support_lo = -p.d - p.h - p.d2;
  u0.support_hi = -p.d - p.h - p.d1;
  u0.plateau_height = p.plateau();
  u0.ramp_width = ramp_width;
  u0.odd_extension = true;
  if (u0.support_hi + ramp_width > -p.d - p.h)
    fail(ErrorCode::RampTooWide, "ramp reaches the zero band (-d-h, -d)");
  return u0;
}

GridFunction::GridFunction(Eigen::VectorXd values, ExteriorDatum datum)
    : values_(std::move(values)), datum_(datum) {
  require(values_.size() >= 3, "need at least 3 nodes");
  require(datum_.d > 0.0, "half width must be positive");
  require(values_.allFinite(), "non-finite node value");
}

GridFunction GridFunction::zeros(int n_nodes, const ExteriorDatum& datum) {
  require(n_nodes >= 3, "need at least 3 nodes");
  return {Eigen::VectorXd::Zero(n_nodes), datum};
}

double GridFunction::operator()(double x) const {
  const double d = datum_.d;
  if (x <= -d || x >= d) return eval_datum(datum_, x);
  const double dx = spacing();
  const double pos = (x + d) / dx;  // node i sits at pos = i + 1
  const int k = std::min(static_cast<int>(pos), size());
  const double t = pos - k;
  const double left = k == 0 ? eval_datum(datum_, -d) : values_[k - 1];
  const double right = k == size() ? eval_datum(datum_, d) : values_[k];
  return left + t * (right - left);
}

PiecewiseLinear GridFunction::to_piecewise_linear() const {
  if (!datum_.is_continuous())
    fail(ErrorCode::PreconditionFailed, "discontinuous datum has no piecewise-linear graph");
  const double d = datum_.d;
  const double dx = spacing();
  std::vector<double> ext = datum_.knots();
  double reach = d;
  for (double k : ext) reach = std::max(reach, std::abs(k));
  reach += 2.0 * d;
  for (double step = dx; d + step < reach; step *= 2.0) {
    ext.push_back(d + step);
    ext.push_back(-d - step);
  }
  ext.push_back(reach);
  ext.push_back(-reach);
  std::sort(ext.begin(), ext.end());

  std::vector<double> knots;
  std::vector<double> vals;
  auto push = [&](double x, double y) {
    knots.push_back(x);
    vals.push_back(y);
  };
  // Exterior knots too close to +-d would create sliver cells.
  const double gap = 0.25 * dx;
  for (double k : ext)
    if (k < -d - gap && (knots.empty() || k > knots.back())) push(k, eval_datum(datum_, k));
  push(-d, eval_datum(datum_, -d));
  for (int i = 0; i < size(); ++i) push(node(i), values_[i]);
  push(d, eval_datum(datum_, d));
  for (double k : ext)
    if (k > d + gap && k > knots.back()) push(k, eval_datum(datum_, k));
  return PiecewiseLinear(std::move(knots), std::move(vals));
}

}  // namespace nmg
