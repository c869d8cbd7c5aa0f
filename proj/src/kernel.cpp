#include "nmg/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "nmg/error.hpp"

namespace nmg {
namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Adaptive quadrature over [a, b], split at every cut strictly inside.
template <class F>
Estimate integrate_pieces(F&& f, double a, double b, const std::vector<double>& cuts, double tol) {
  Estimate acc;
  double lo = a;
  for (double c : cuts) {
    if (c <= lo || c >= b) continue;
    acc += integrate_adaptive(f, lo, c, tol);
    lo = c;
  }
  acc += integrate_adaptive(f, lo, b, tol);
  return acc;
}

void check_tolerance(const Estimate& e, const QuadratureSpec& q, const char* what) {
  const double allowed = std::max(q.abs_tol, q.rel_tol * std::abs(e.value));
  if (!(e.error <= allowed) || !std::isfinite(e.value)) {
    std::ostringstream os;
    os << what << ": error estimate " << e.error << " exceeds " << allowed;
    fail(ErrorCode::NonconvergedQuadrature, os.str());
  }
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

}  // namespace

void QuadratureSpec::validate() const {
  require(rel_tol > 0.0 && abs_tol > 0.0, "quadrature tolerances must be positive");
  require(singular_width > 0.0 && tail_radius > singular_width,
          "need tail_radius > singular_width > 0");
}

RegionSet::RegionSet(PiecewiseLinear graph, std::vector<Rect> added, std::vector<Rect> removed)
    : graph_(std::move(graph)), added_(std::move(added)), removed_(std::move(removed)) {
  auto samples = [](const Rect& r) { return std::array<double, 3>{r.x0, 0.5 * (r.x0 + r.x1), r.x1}; };
  for (const auto* list : {&added_, &removed_}) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      require((*list)[i].x1 > (*list)[i].x0 && (*list)[i].y1 > (*list)[i].y0, "rectangle with empty interior");
      for (std::size_t j = 0; j < i; ++j)
        require(!interiors_overlap((*list)[i], (*list)[j]), "rectangles in one list must not overlap");
    }
  }
  for (const Rect& r : added_)
    for (double x : samples(r)) require(r.y0 >= graph_(x), "added rectangle intersects the subgraph");
  for (const Rect& r : removed_)
    for (double x : samples(r)) require(r.y1 <= graph_(x), "removed rectangle leaves the subgraph");
}

bool RegionSet::contains(const Point& p) const {
  for (const Rect& r : removed_)
    if (r.contains(p)) return false;
  for (const Rect& r : added_)
    if (r.contains(p)) return true;
  return p.y() < graph_(p.x());
}

std::vector<double> RegionSet::breakpoints() const {
  std::vector<double> out(graph_.knots().begin(), graph_.knots().end());
  for (const auto* list : {&added_, &removed_})
    for (const Rect& r : *list) {
      out.push_back(r.x0);
      out.push_back(r.x1);
    }
  return sorted_unique(std::move(out));
}

Estimate nmc_graph(const PiecewiseLinear& u, double x0, FracOrder order, const QuadratureSpec& q) {
  q.validate();
  const auto prof = GProfile::get(order);
  const double s = order.value();
  const double clear = u.distance_to_kink(x0);
  if (clear == 0.0)
    fail(ErrorCode::NonconvergedQuadrature, "principal value diverges at a kink of the graph");

  // sigma = +1: right of x0, sigma = -1: left.
  auto rho = [&](double t, double sigma) { return -u.step(x0, sigma * t) / t; };
  auto side = [&](double t, double sigma) { return prof->value(rho(t, sigma)) * std::pow(t, -1.0 - s); };

  std::vector<double> right, left;
  for (double k : u.knots()) {
    if (k > x0) right.push_back(k - x0);
    if (k < x0) left.push_back(x0 - k);
  }
  std::sort(left.begin(), left.end());

  const double tol = 0.1 * q.rel_tol;
  Estimate total;

  // The +t/-t pair cancels identically while u is affine around x0, and it
  // also cancels exactly on affine tails, so both sides are integrated paired.
  std::vector<double> cuts = right;
  cuts.insert(cuts.end(), left.begin(), left.end());
  cuts = sorted_unique(std::move(cuts));
  const double far = std::max({q.tail_radius, right.empty() ? 0.0 : right.back(), left.empty() ? 0.0 : left.back()});
  // Close to a kink the integrand decays like t^{-1-s} from t = clear on, so
  // the first piece is graded geometrically.
  const auto next = std::upper_bound(cuts.begin(), cuts.end(), clear);
  const double first = next == cuts.end() ? far : *next;
  for (double c = 2.0 * clear; c < first; c *= 2.0) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  auto paired = [&](double t) { return side(t, 1.0) + side(t, -1.0); };
  if (clear < far) total += integrate_pieces(paired, clear, far, cuts, tol);
  total += integrate_power_tail([&](double z) { return prof->value(rho(z, 1.0)) + prof->value(rho(z, -1.0)); },
                                far, s, tol);

  const Estimate h = 2.0 * total;
  check_tolerance(h, q, "nmc_graph");
  return h;
}

Estimate nmc_set_bruteforce(const RegionSet& e, const Point& p, FracOrder order, const QuadratureSpec& q) {
  q.validate();
  const double probe = 0.5 * q.singular_width;
  if (e.contains({p.x(), p.y() - probe}) == e.contains({p.x(), p.y() + probe}))
    fail(ErrorCode::PointNotOnBoundary, "membership does not change across the point vertically");

  const auto prof = GProfile::get(order);
  const double s = order.value();
  const PiecewiseLinear& f = e.graph();
  const double base = f(p.x()) - p.y();

  // int (chi_{E^c} - chi_E) over the vertical line x = p.x + t, times |t|^{1+s}.
  auto slice_scaled = [&](double t) {
    const double x = p.x() + t;
    const double a = std::abs(t);
    // Weighted measure of E on the slice minus that of the half-plane below p.
    // Working with the difference keeps symmetric slices cancelling exactly.
    double excess = prof->value((f.step(p.x(), t) + base) / a);
    for (const Rect& r : e.added())
      if (x > r.x0 && x < r.x1) excess += prof->value((r.y1 - p.y()) / a) - prof->value((r.y0 - p.y()) / a);
    for (const Rect& r : e.removed())
      if (x > r.x0 && x < r.x1) excess -= prof->value((r.y1 - p.y()) / a) - prof->value((r.y0 - p.y()) / a);
    return -2.0 * excess;
  };
  auto slice = [&](double t) { return slice_scaled(t) * std::pow(std::abs(t), -1.0 - s); };

  std::vector<double> right, left;
  for (double b : e.breakpoints()) {
    if (b > p.x()) right.push_back(b - p.x());
    if (b < p.x()) left.push_back(p.x() - b);
  }
  std::sort(left.begin(), left.end());

  const double tol = 0.1 * q.rel_tol;
  std::vector<double> cuts = right;
  cuts.insert(cuts.end(), left.begin(), left.end());
  cuts = sorted_unique(std::move(cuts));

  const double far = std::max({q.tail_radius, right.empty() ? 0.0 : right.back(), left.empty() ? 0.0 : left.back()});
  Estimate total = integrate_pieces([&](double t) { return slice(t) + slice(-t); }, 0.0, far, cuts, tol);
  total += integrate_power_tail([&](double z) { return slice_scaled(z) + slice_scaled(-z); }, far, s, tol);
  check_tolerance(total, q, "nmc_set_bruteforce");
  return total;
}

Estimate interaction(const Rect& a, const Rect& b, FracOrder order, const QuadratureSpec& q) {
  q.validate();
  require(a.area() > 0.0 && b.area() > 0.0, "rectangles must have positive area");
  if (interiors_overlap(a, b)) fail(ErrorCode::OverlappingRegions, "rectangle interiors intersect");

  const auto prof = GProfile::get(order);
  const double s = order.value();
  const double ginf = prof->limit();

  // y-integrals in closed form: with D = |r| the horizontal offset,
  //   int_A.y int_B.y (D^2 + (y - y')^2)^{-(2+s)/2} = sum_k sign_k D^{-s} Ghat(z_k / D).
  const std::array<double, 4> z = {a.y1 - b.y0, a.y0 - b.y0, a.y1 - b.y1, a.y0 - b.y1};
  const std::array<double, 4> sign = {1.0, -1.0, -1.0, 1.0};
  double linear = 0.0;
  for (int k = 0; k < 4; ++k) linear += sign[k] * std::abs(z[k]);

  // Length of {x in A.x : x - r in B.x}.
  auto overlap = [&](double r) { return std::max(0.0, std::min(a.x1, b.x1 + r) - std::max(a.x0, b.x0 + r)); };
  auto integrand = [&](double r) {
    const double d = std::abs(r);
    double excess = 0.0;
    for (int k = 0; k < 4; ++k) excess += sign[k] * prof->antiderivative_excess(z[k] / d);
    return overlap(r) * (ginf * linear * std::pow(d, -1.0 - s) + excess * std::pow(d, -s));
  };

  const double lo = a.x0 - b.x1;
  const double hi = a.x1 - b.x0;
  std::vector<double> cuts = sorted_unique({lo, a.x0 - b.x0, a.x1 - b.x1, hi, 0.0});
  const double tol = 0.1 * q.rel_tol;
  Estimate total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double c0 = std::max(cuts[i], lo);
    const double c1 = std::min(cuts[i + 1], hi);
    if (c1 <= c0) continue;
    if (c0 == 0.0) {
      total += integrate_singular_left(integrand, 0.0, c1, s, tol);
    } else if (c1 == 0.0) {
      total += integrate_singular_left([&](double t) { return integrand(-t); }, 0.0, -c0, s, tol);
    } else {
      total += integrate_adaptive(integrand, c0, c1, tol);
    }
  }
  check_tolerance(total, q, "interaction");
  return total;
}

}  // namespace nmg
