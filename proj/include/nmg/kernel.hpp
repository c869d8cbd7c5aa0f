#pragma once

#include <vector>

#include <Eigen/Core>

#include "nmg/g_profile.hpp"
#include "nmg/piecewise_linear.hpp"
#include "nmg/quadrature.hpp"

namespace nmg {

using Point = Eigen::Vector2d;

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  /// Beyond this offset the graph is affine and the remainder is integrated
  /// after the substitution w = (R/|t|)^s.
  double tail_radius = 40.0;
  /// Half-width of the symmetric principal-value window.
  double singular_width = 0.03;

  void validate() const;
};

/// Axis-aligned rectangle (x0, x1) x (y0, y1).
struct Rect {
  double x0, x1, y0, y1;

  double area() const { return (x1 - x0) * (y1 - y0); }
  Rect translated(double dx, double dy) const { return {x0 + dx, x1 + dx, y0 + dy, y1 + dy}; }
  bool contains(const Point& p) const { return p.x() > x0 && p.x() < x1 && p.y() > y0 && p.y() < y1; }
};

/// Subgraph {y < f(x)} of a piecewise-linear f, plus rectangles disjoint from
/// it, minus rectangles contained in it.
class RegionSet {
 public:
  explicit RegionSet(PiecewiseLinear graph, std::vector<Rect> added = {}, std::vector<Rect> removed = {});

  bool contains(const Point& p) const;
  const PiecewiseLinear& graph() const { return graph_; }
  const std::vector<Rect>& added() const { return added_; }
  const std::vector<Rect>& removed() const { return removed_; }

  /// Abscissae where the vertical slices change structure.
  std::vector<double> breakpoints() const;

 private:
  PiecewiseLinear graph_;
  std::vector<Rect> added_;
  std::vector<Rect> removed_;
};

/// Nonlocal mean curvature of the subgraph of u at (x0, u(x0)):
///
///   H(x0) = 2 PV int G((u(x0) - u(x0 + t)) / |t|) |t|^{-(1+s)} dt.
///
/// Throws NonconvergedQuadrature when the tolerance is not met; in particular
/// at a kink of u, where the principal value diverges.
Estimate nmc_graph(const PiecewiseLinear& u, double x0, FracOrder order, const QuadratureSpec& q);

/// PV int (chi_{E^c}(X) - chi_E(X)) |X - P|^{-(2+s)} dX for a point P on the
/// boundary of E, integrated slice by slice in x with exact y-integrals.
Estimate nmc_set_bruteforce(const RegionSet& e, const Point& p, FracOrder order, const QuadratureSpec& q);

/// L_s(A, B) = int_A int_B |X - Y|^{-(2+s)} dX dY for rectangles with
/// disjoint interiors (shared edges allowed).
Estimate interaction(const Rect& a, const Rect& b, FracOrder order, const QuadratureSpec& q);

}  // namespace nmg
