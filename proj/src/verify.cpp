#include "nmg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nmg/error.hpp"

namespace nmg {

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

IneqReport make_report(std::string name, double lhs, Relation rel, double rhs, double tolerance) {
  IneqReport r{std::move(name), lhs, rhs, rel, 0.0, tolerance, false};
  switch (rel) {
    case Relation::Less:
    case Relation::LessEq: r.margin = rhs - lhs; break;
    case Relation::Greater:
    case Relation::GreaterEq: r.margin = lhs - rhs; break;
    case Relation::Equal: r.margin = -std::abs(lhs - rhs); break;
  }
  const bool strict = rel == Relation::Less || rel == Relation::Greater;
  r.pass = strict && tolerance == 0.0 ? r.margin > 0.0 : r.margin >= -tolerance;
  if (!std::isfinite(r.margin)) r.pass = false;
  return r;
}

namespace {

double a_factor(const Params& p) {
  const double s = p.s.value();
  return std::pow(p.h, 2.0 + s) / std::pow(p.h * p.h + 2.0, 0.5 * (2.0 + s));
}

double b_closed_form(const Params& p) {
  const double s = p.s.value();
  return 1.0 / ((1.0 + s) * std::pow(p.d - p.d0, 1.0 + s));
}

// Negative-side pieces of the datum: consecutive knots below zero.
std::vector<std::pair<double, double>> bump_pieces(const ExteriorDatum& u0) {
  std::vector<double> k;
  for (double x : u0.knots())
    if (x < 0.0) k.push_back(x);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) out.emplace_back(k[i], k[i + 1]);
  return out;
}

void check(const Estimate& e, double rel_tol, const char* what) {
  if (!(e.error <= std::max(1e-300, rel_tol * std::abs(e.value)) || e.value == 0.0))
    fail(ErrorCode::NonconvergedQuadrature, what);
}

}  // namespace

IneqReport check_ks_geop(const Params& p) {
  const double s = p.s.value();
  const double rhs = 2.0 * p.cbar / ((1.0 + s) * std::pow(p.d - p.d0, 1.0 + s));
  return make_report("ks_geop", a_factor(p), Relation::Greater, rhs, 0.0);
}

double datum_mass_integral(const ExteriorDatum& u0, const Params& p, const QuadratureSpec& q) {
  q.validate();
  const double s = p.s.value();
  const double edge = -p.d - p.h;
  Estimate total;
  for (auto [a, b] : bump_pieces(u0)) {
    if (a >= edge) continue;
    b = std::min(b, edge);
    // Sample inside the piece so the indicator's closed ends do not matter.
    const double mid = eval_datum(u0, 0.5 * (a + b));
    const bool flat = u0.ramp_width == 0.0 || (a >= u0.support_lo && b <= u0.support_hi);
    auto f = [&](double x) {
      const double val = flat ? mid : eval_datum(u0, x);
      return val * std::pow(p.d0 - p.d - x, -2.0 - s);
    };
    total += integrate_adaptive(f, a, b, 0.1 * q.rel_tol);
  }
  check(total, q.rel_tol, "datum mass integral");
  return total.value;
}

IneqReport b_tail_integral(const Params& p, const QuadratureSpec& q) {
  q.validate();
  const double s = p.s.value();
  const double c = p.d - p.d0;
  const double R = q.tail_radius;
  Estimate e = integrate_adaptive([&](double x) { return std::pow(x + c, -2.0 - s); }, 0.0, R, 0.1 * q.rel_tol);
  e += integrate_power_tail([&](double x) { return std::pow(1.0 + c / x, -2.0 - s); }, R, 1.0 + s, 0.1 * q.rel_tol);
  const double rhs = b_closed_form(p);
  return make_report("b_tail_integral", e.value, Relation::Equal, rhs, 1e-6 * rhs);
}

IneqReport bump_b_bound(const Params& p, double pt_p, const QuadratureSpec& qs, double height) {
  qs.validate();
  if (!(pt_p > -p.d && pt_p <= -p.d + p.d0)) fail(ErrorCode::DomainViolation, "p must lie in (-d, -d+d0]");
  if (!(height >= 0.0 && height <= p.delta())) fail(ErrorCode::DomainViolation, "q must lie in [0, delta]");
  const double rhs = p.plateau() * b_closed_form(p);
  if (p.plateau() == 0.0) return make_report("bump_b_bound", 0.0, Relation::LessEq, rhs, 0.0);
  const auto prof = GProfile::get(p.s);
  // Slices at horizontal offset t = x - p: t^{-1-s} (G((0 - q)/t) - G((-cbar eta - q)/t)).
  auto f = [&](double t) { return prof->value(-height / t) - prof->value((-p.plateau() - height) / t); };
  const Estimate lhs = integrate_power_tail(f, -pt_p, p.s.value(), 0.1 * qs.rel_tol);
  check(lhs, qs.rel_tol, "B integral");
  return make_report("bump_b_bound", lhs.value, Relation::LessEq, rhs, qs.rel_tol * rhs);
}

IneqReport bump_a_lower(const Params& p, const Point& pt, const ExteriorDatum& u0, const QuadratureSpec& qs) {
  qs.validate();
  if (!(pt.x() > -p.d && pt.x() < -p.d + p.d0) || std::abs(pt.y()) > p.delta())
    fail(ErrorCode::DomainViolation, "P must lie in (-d, -d+d0) x [-delta, delta]");
  double top = 0.0;
  for (auto [a, b] : bump_pieces(u0)) top = std::max(top, eval_datum(u0, 0.5 * (a + b)));
  if (top + p.delta() > 2.0) fail(ErrorCode::EnvelopeViolated, "datum height plus delta exceeds 2");

  const auto prof = GProfile::get(p.s);
  const double s = p.s.value();
  Estimate lhs;
  for (auto [a, b] : bump_pieces(u0)) {
    const double mid = eval_datum(u0, 0.5 * (a + b));
    const bool flat = u0.ramp_width == 0.0 || (a >= u0.support_lo && b <= u0.support_hi);
    auto f = [&](double x) {
      const double t = pt.x() - x;
      const double top_x = flat ? mid : eval_datum(u0, x);
      return (prof->value((top_x - pt.y()) / t) - prof->value(-pt.y() / t)) * std::pow(t, -1.0 - s);
    };
    lhs += integrate_adaptive(f, a, b, 0.1 * qs.rel_tol);
  }
  check(lhs, qs.rel_tol, "A integral");
  const double rhs = a_factor(p) * datum_mass_integral(u0, p, qs);
  return make_report("bump_a_lower", lhs.value, Relation::GreaterEq, rhs, qs.rel_tol * rhs);
}

IneqReport distance_envelope(const Params& p, const Point& pt, const ExteriorDatum& u0, std::uint64_t seed,
                             int count) {
  const auto pieces = bump_pieces(u0);
  const double factor = std::sqrt((p.h * p.h + 2.0) / (p.h * p.h));
  double worst = 0.0;
  if (!pieces.empty() && u0.plateau_height > 0.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = pieces.front().first;
    const double hi = pieces.back().second;
    for (int i = 0; i < count;) {
      const double x = lo + (hi - lo) * unit(rng);
      const double top = eval_datum(u0, x);
      if (top <= 0.0) continue;
      const Point X(x, top * unit(rng));
      worst = std::max(worst, (X - pt).norm() / (std::abs(x - pt.x()) * factor));
      ++i;
    }
  }
  return make_report("distance_envelope", worst, Relation::LessEq, 1.0, 1e-12);
}

IneqReport net_curvature_margin(const Params& p, double barrier_constant, double delta) {
  const double s = p.s.value();
  const double lhs = barrier_constant * delta +
                     2.0 * p.cbar * p.cstar * delta / ((1.0 + s) * std::pow(p.d - p.d0, 1.0 + s)) -
                     p.cstar * a_factor(p) * delta;
  const double rhs = -p.cstar * p.theta * delta / 2.0;
  const double scale = std::abs(barrier_constant * delta) + std::abs(p.cstar * a_factor(p) * delta);
  return make_report("net_curvature_margin", lhs, Relation::LessEq, rhs, 1e-12 * scale);
}

Point reflect_tilde(const Point& x, double /*p*/, double up) {
  return {-x.x(), 2.0 * up - x.y()};
}

bool check_reflect(const Point& x, const Point& pt) {
  return (reflect_tilde(x, pt.x(), pt.y()) - pt).norm() <= (x - pt).norm();
}

double reflect_identity_defect(const Point& x, const Point& pt) {
  const Point xt = reflect_tilde(x, pt.x(), pt.y());
  return ((xt - pt).squaredNorm() - (x - pt).squaredNorm()) - 4.0 * x.x() * pt.x();
}

}  // namespace nmg
