#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace nmg {

/// A quadrature result together with its (propagated) error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;

  Estimate& operator+=(const Estimate& other) {
    value += other.value;
    error += other.error;
    return *this;
  }
  friend Estimate operator+(Estimate a, const Estimate& b) { return a += b; }
  friend Estimate operator*(double c, const Estimate& e) {
    return {c * e.value, std::abs(c) * e.error};
  }
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::span<const double> nodes;
  std::span<const double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// Sizes 1..64; larger requests are clamped.
GaussRule gauss_legendre(int points);

namespace detail {

// One 15-point Gauss-Kronrod panel. Boost reports the error on the reference
// interval, so it is rescaled here.
template <class F>
Estimate gk15_panel(F& f, double a, double b, double* l1) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err, l1);
  return {v, err * 0.5 * (b - a)};
}

// Refines the panel estimate e of (a, b) by bisection.
template <class F>
Estimate gk15_refine(F& f, double a, double b, const Estimate& e, double l1, double abs_tol, double rel_tol,
                     unsigned depth, double* l1_out) {
  *l1_out = l1;
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * l1;
  if (depth == 0 || e.error <= std::max({abs_tol, rel_tol * std::abs(e.value), roundoff})) return e;
  const double mid = 0.5 * (a + b);
  double la = 0.0, lb = 0.0;
  const Estimate ea = gk15_panel(f, a, mid, &la);
  const Estimate eb = gk15_panel(f, mid, b, &lb);
  Estimate out = gk15_refine(f, a, mid, ea, la, 0.5 * abs_tol, rel_tol, depth - 1, &la);
  out += gk15_refine(f, mid, b, eb, lb, 0.5 * abs_tol, rel_tol, depth - 1, &lb);
  *l1_out = la + lb;
  return out;
}

}  // namespace detail

/// Adaptive 15-point Gauss-Kronrod on a finite interval by bisection. The
/// reported error is floored at a roundoff bound proportional to the L1 norm
/// of the integrand.
template <class F>
Estimate integrate_adaptive(F&& f, double a, double b, double rel_tol, unsigned max_depth = 20) {
  if (a == b) return {};
  double l1 = 0.0;
  const Estimate first = detail::gk15_panel(f, a, b, &l1);
  const Estimate e = detail::gk15_refine(f, a, b, first, l1, rel_tol * std::abs(first.value), rel_tol, max_depth, &l1);
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * l1;
  return {e.value, std::max(e.error, roundoff)};
}

/// Integral of f(z) z^{-1-p} over (Z, inf) for p > 0, via w = (Z/z)^p, which
/// turns it into Z^{-p}/p * int_0^1 f(Z w^{-1/p}) dw.
template <class F>
Estimate integrate_power_tail(F&& f, double Z, double p, double rel_tol) {
  const double scale = std::pow(Z, -p) / p;
  auto g = [&](double w) { return f(Z * std::pow(w, -1.0 / p)); };
  return scale * integrate_adaptive(g, 0.0, 1.0, rel_tol);
}

/// Integral over (a, b) of an integrand behaving like |x - a|^{-alpha} near a
/// (0 <= alpha < 1): substitutes x = a + (b - a) v^{1/(1-alpha)}.
template <class F>
Estimate integrate_singular_left(F&& f, double a, double b, double alpha, double rel_tol) {
  const double beta = 1.0 / (1.0 - alpha);
  const double len = b - a;
  auto g = [&](double v) {
    return f(a + len * std::pow(v, beta)) * len * beta * std::pow(v, beta - 1.0);
  };
  return integrate_adaptive(g, 0.0, 1.0, rel_tol);
}

}  // namespace nmg
