#include "nmg/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nmg/error.hpp"

namespace nmg {

PiecewiseLinear::PiecewiseLinear(std::vector<double> knots, std::vector<double> values,
                                 double left_slope, double right_slope)
    : knots_(std::move(knots)),
      values_(std::move(values)),
      left_slope_(left_slope),
      right_slope_(right_slope) {
  require(!knots_.empty(), "piecewise-linear function needs at least one knot");
  require(knots_.size() == values_.size(), "knot/value size mismatch");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    require(std::isfinite(knots_[i]) && std::isfinite(values_[i]), "non-finite knot or value");
    if (i > 0) require(knots_[i] > knots_[i - 1], "knots must be strictly increasing");
  }
  require(std::isfinite(left_slope_) && std::isfinite(right_slope_), "non-finite tail slope");
}

PiecewiseLinear PiecewiseLinear::affine(double slope, double intercept) {
  return PiecewiseLinear({0.0}, {intercept}, slope, slope);
}

std::size_t PiecewiseLinear::piece_of(double x) const {
  return static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
}

double PiecewiseLinear::piece_slope(std::size_t k) const {
  if (k == 0) return left_slope_;
  if (k >= knots_.size()) return right_slope_;
  return (values_[k] - values_[k - 1]) / (knots_[k] - knots_[k - 1]);
}

double PiecewiseLinear::operator()(double x) const {
  const std::size_t k = piece_of(x);
  if (k == 0) return values_.front() + left_slope_ * (x - knots_.front());
  if (k == knots_.size()) return values_.back() + right_slope_ * (x - knots_.back());
  const double t = (x - knots_[k - 1]) / (knots_[k] - knots_[k - 1]);
  return values_[k - 1] + t * (values_[k] - values_[k - 1]);
}

double PiecewiseLinear::increment(double from, double to) const {
  if (from == to) return 0.0;
  if (to < from) return -increment(to, from);
  const std::size_t ka = piece_of(from);
  const std::size_t kb = piece_of(to);
  if (ka == kb) return piece_slope(ka) * (to - from);
  double acc = piece_slope(ka) * (knots_[ka] - from);
  for (std::size_t k = ka + 1; k < kb; ++k) acc += values_[k] - values_[k - 1];
  acc += piece_slope(kb) * (to - knots_[kb - 1]);
  return acc;
}

double PiecewiseLinear::step(double from, double t) const {
  // Walk from kink to kink; knots without a slope change are skipped.
  const std::size_t k = piece_of(from);
  const double to = from + t;
  double slope = piece_slope(k);
  double at = from;
  double acc = 0.0;
  if (t > 0.0) {
    for (std::size_t i = k; i < knots_.size() && knots_[i] < to; ++i) {
      const double next = piece_slope(i + 1);
      if (next == slope) continue;
      acc += slope * (knots_[i] - at);
      at = knots_[i];
      slope = next;
    }
  } else {
    for (std::size_t i = k; i-- > 0 && knots_[i] > to;) {
      const double next = piece_slope(i);
      if (next == slope) continue;
      acc += slope * (knots_[i] - at);
      at = knots_[i];
      slope = next;
    }
  }
  return acc + slope * (at == from ? t : to - at);
}

std::vector<double> PiecewiseLinear::kinks() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const double left = piece_slope(i);
    const double right = piece_slope(i + 1);
    const double scale = std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(left - right) > 1e-14 * scale) out.push_back(knots_[i]);
  }
  return out;
}

double PiecewiseLinear::distance_to_kink(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (double k : kinks()) best = std::min(best, std::abs(k - x));
  return best;
}

PiecewiseLinear PiecewiseLinear::odd_reflection() const {
  std::vector<double> k(knots_.size());
  std::vector<double> v(values_.size());
  const std::size_t n = knots_.size();
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = -knots_[n - 1 - i];
    v[i] = -values_[n - 1 - i];
  }
  // v(x) = -u(-x) has v'(x) = u'(-x): tails swap sides, slopes keep their sign.
  return PiecewiseLinear(std::move(k), std::move(v), right_slope_, left_slope_);
}

PiecewiseLinear PiecewiseLinear::translated(double shift) const {
  std::vector<double> k = knots_;
  for (double& x : k) x += shift;
  return PiecewiseLinear(std::move(k), values_, left_slope_, right_slope_);
}

PiecewiseLinear PiecewiseLinear::scaled(double scale) const {
  std::vector<double> v = values_;
  for (double& y : v) y *= scale;
  return PiecewiseLinear(knots_, std::move(v), left_slope_ * scale, right_slope_ * scale);
}

}  // namespace nmg
