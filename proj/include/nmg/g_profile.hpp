#pragma once

#include <array>
#include <memory>

namespace nmg {

/// Fractional order s, strictly inside (0, 1).
class FracOrder {
 public:
  explicit FracOrder(double s);
  double value() const noexcept { return s_; }

 private:
  double s_;
};

/// Vertical-slice profile of the kernel |X|^{-(2+s)}:
///
///   G(rho) = int_0^rho (1 + tau^2)^{-(2+s)/2} dtau = int_0^{atan rho} cos^s(theta) dtheta.
///
/// Integrating the kernel over a vertical half line at horizontal offset t
/// gives |t|^{-(1+s)} (G(inf) - G(rho)), which is what turns every 2D set
/// integral in this library into 1D quadrature.
///
/// Evaluation uses two Chebyshev fits built once per s: G(rho)/atan(rho) on
/// |rho| <= 1, and the far-field remainder G(inf) - G(rho) = psi^{1+s} S(psi),
/// psi = atan(1/|rho|), on |rho| > 1. Objects are immutable after construction.
class GProfile {
 public:
  static constexpr int kDegree = 32;

  explicit GProfile(FracOrder order);

  /// Shared instance per s, built on first use.
  static std::shared_ptr<const GProfile> get(FracOrder order);

  double s() const noexcept { return s_; }
  /// G(inf) = sqrt(pi) Gamma((1+s)/2) / (2 Gamma(1 + s/2)).
  double limit() const noexcept { return g_inf_; }

  double value(double rho) const noexcept;
  double derivative(double rho) const noexcept;
  /// Ghat(rho) = int_0^rho G = rho G(rho) - (1 - (1+rho^2)^{-s/2}) / s. Even, convex.
  double antiderivative(double rho) const noexcept;
  /// Ghat(rho) - G(inf) |rho|, evaluated without cancellation for large |rho|.
  double antiderivative_excess(double rho) const noexcept;

 private:
  double near_ratio(double theta) const noexcept;  // G / atan(rho)
  double far_ratio(double psi) const noexcept;     // (G(inf) - G) / psi^{1+s}

  double s_;
  double g_inf_;
  std::array<double, kDegree> near_{};
  std::array<double, kDegree> far_{};
};

/// G(rho) for the given order (memoized profile).
double g_profile(double rho, FracOrder order);

}  // namespace nmg
