#pragma once

#include <vector>

#include <Eigen/Core>

#include "nmg/g_profile.hpp"
#include "nmg/piecewise_linear.hpp"

namespace nmg {

/// Structural constants of the antisymmetric stickiness setting.
struct Params {
  FracOrder s{0.5};
  double epsilon0 = 0.1;
  double cbar = 0.0;
  double d = 0.0;
  double d0 = 0.0;
  double h = 0.0;
  double eta = 0.0;
  double cstar = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double theta = 0.0;  // derived from s, cbar, d, d0, h

  double delta() const { return eta / cstar; }
  /// Plateau height of the exterior bump.
  double plateau() const { return cbar * eta; }

  /// Validates the inputs and fills theta.
  static Params make(FracOrder s, double epsilon0, double cbar, double d, double d0, double h, double eta,
                     double cstar, double d1, double d2);
};

/// h^{2+s} / (h^2 + 2)^{(2+s)/2} - 2 cbar / ((1+s)(d - d0)^{1+s}).
double geometric_margin(double s, double cbar, double d, double d0, double h);

/// The explicit preset: cbar = 2^{2+s}(1+s), d = 3^{(2+s)/(2(1+s))} 2^{(3+s)/(1+s)} + 2,
/// d0 = h = 1, d1 = 2((10/9)^{1/(1+s)} - 1), d2 = 2(10^{1/(1+s)} - 1) and
/// cstar = 4 C / theta for the barrier constant C.
Params paper_params(FracOrder s, double epsilon0, double eta, double barrier_constant = 1.0);

/// Same constants with d replaced (theta recomputed, cstar kept).
Params with_half_width(const Params& p, double d);

/// Exterior datum: a trapezoidal bump on the negative side, optionally
/// extended oddly to the positive side, zero elsewhere.
struct ExteriorDatum {
  double d = 1.0;               // the datum governs |x| >= d
  double support_lo = -1.0;     // plateau (support_lo, support_hi)
  double support_hi = -1.0;
  double plateau_height = 0.0;
  double ramp_width = 0.0;      // 0 gives the indicator
  bool odd_extension = true;

  bool is_continuous() const { return ramp_width > 0.0 || plateau_height == 0.0; }
  bool is_odd() const { return odd_extension || plateau_height == 0.0; }
  /// Abscissae where the datum is not smooth, ascending, both sides.
  std::vector<double> knots() const;
  /// Recorded, not enforced: 0 for the indicator, 1 for Lipschitz ramps.
  int smoothness_class() const { return is_continuous() ? 1 : 0; }

  bool operator==(const ExteriorDatum&) const = default;
};

double eval_datum(const ExteriorDatum& u0, double x);

ExteriorDatum zero_datum(double d);
/// Plateau of height cbar * eta on (-d-h-d2, -d-h-d1), linear ramps of the
/// given width. Throws RampTooWide if a ramp would reach -d-h.
ExteriorDatum paper_datum(const Params& p, double ramp_width);
/// Ramp width used when none is given: half of d1.
double default_ramp_width(const Params& p);

/// Heights at the uniform nodes x_i = -d + (i+1) dx, dx = 2d/(n+1), with the
/// exterior datum outside (-d, d).
class GridFunction {
 public:
  GridFunction(Eigen::VectorXd values, ExteriorDatum datum);
  static GridFunction zeros(int n_nodes, const ExteriorDatum& datum);

  int size() const { return static_cast<int>(values_.size()); }
  double half_width() const { return datum_.d; }
  double spacing() const { return 2.0 * datum_.d / (size() + 1); }
  double node(int i) const { return -datum_.d + (i + 1) * spacing(); }
  int mirror(int i) const { return size() - 1 - i; }

  const Eigen::VectorXd& values() const { return values_; }
  const ExteriorDatum& datum() const { return datum_; }
  GridFunction with_values(Eigen::VectorXd values) const { return {std::move(values), datum_}; }

  /// Linear interpolation inside, the datum outside; the segments next to +-d
  /// join the outermost nodes to the datum's one-sided limits.
  double operator()(double x) const;

  /// Exact piecewise-linear representation on the whole line. Besides the
  /// nodes, +-d and the datum knots, it carries geometric exterior knots
  /// +-(d + dx 2^k) which give the Galerkin quadrature graded cells.
  PiecewiseLinear to_piecewise_linear() const;

 private:
  Eigen::VectorXd values_;
  ExteriorDatum datum_;
};

}  // namespace nmg
