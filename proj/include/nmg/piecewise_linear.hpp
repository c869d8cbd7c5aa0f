#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nmg {

/// Continuous piecewise-linear function on the real line: linear interpolation
/// between strictly increasing knots, affine continuation beyond the outermost
/// knots with the given tail slopes (zero slopes give constant tails).
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> knots, std::vector<double> values, double left_slope = 0.0,
                  double right_slope = 0.0);

  /// u(x) = slope * x + intercept.
  static PiecewiseLinear affine(double slope, double intercept);

  double operator()(double x) const;
  /// u(to) - u(from), accumulated piece by piece so that points on a common
  /// piece give exactly slope * (to - from).
  double increment(double from, double to) const;
  /// u(from + t) - u(from), accumulated between the kinks crossed. Knots
  /// without a slope change are skipped, so steps of +t and -t on an affine
  /// stretch are exactly slope * t and exact negatives of each other.
  double step(double from, double t) const;

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return knots_.size(); }
  double left_slope() const { return left_slope_; }
  double right_slope() const { return right_slope_; }

  /// Slope of piece k, where piece 0 is the left tail, piece k (1 <= k < size)
  /// is [knot k-1, knot k] and piece size() is the right tail.
  double piece_slope(std::size_t k) const;
  /// Index of the piece containing x (ties go right).
  std::size_t piece_of(double x) const;

  /// Knots where the one-sided slopes differ.
  std::vector<double> kinks() const;
  /// Distance from x to the nearest kink (infinity when u is affine).
  double distance_to_kink(double x) const;

  /// v(x) := -u(-x).
  PiecewiseLinear odd_reflection() const;
  /// v(x) := u(x - shift).
  PiecewiseLinear translated(double shift) const;
  /// v(x) := scale * u(x).
  PiecewiseLinear scaled(double scale) const;

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  double left_slope_;
  double right_slope_;
};

}  // namespace nmg
