#include "nmg/g_profile.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "nmg/error.hpp"
#include "nmg/quadrature.hpp"

namespace nmg {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Chebyshev coefficients of f on [0, pi/4] from values at the Gauss-Chebyshev nodes.
template <class F, std::size_t N>
void fit(F&& f, std::array<double, N>& c) {
  std::array<double, N> vals{};
  for (std::size_t k = 0; k < N; ++k) {
    const double t = std::cos(std::numbers::pi * (k + 0.5) / N);
    vals[k] = f(kQuarterPi * 0.5 * (t + 1.0));
  }
  for (std::size_t j = 0; j < N; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < N; ++k)
      acc += vals[k] * std::cos(std::numbers::pi * j * (k + 0.5) / N);
    c[j] = 2.0 * acc / N;
  }
  c[0] *= 0.5;
}

template <std::size_t N>
double clenshaw(const std::array<double, N>& c, double x) {
  const double t = 2.0 * x / kQuarterPi - 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = N; j-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

}  // namespace

FracOrder::FracOrder(double s) : s_(s) {
  if (!(s > 0.0 && s < 1.0)) fail(ErrorCode::InvalidArgument, "fractional order must lie in (0, 1)");
}

GProfile::GProfile(FracOrder order) : s_(order.value()) {
  const double s = s_;
  g_inf_ = std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (1.0 + s)) / (2.0 * std::tgamma(1.0 + 0.5 * s));

  // int_0^theta cos^s / theta; cos^s is analytic on [0, pi/4].
  const GaussRule rule = gauss_legendre(40);
  fit(
      [&](double theta) {
        double acc = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
          const double x = 0.5 * theta * (rule.nodes[i] + 1.0);
          acc += rule.weights[i] * std::pow(std::cos(x), s);
        }
        return 0.5 * acc;
      },
      near_);

  // int_0^psi sin^s / psi^{1+s} = int_0^1 t^s sinc(psi t)^s dt. With
  // sinc(z)^s = sum_k a_k z^{2k} (Miller's recurrence for powers of a series)
  // this is sum_k a_k psi^{2k} / (2k + 1 + s); psi <= pi/4 makes it converge fast.
  constexpr int kTerms = 40;
  std::array<double, kTerms> sinc{};
  std::array<double, kTerms> pw{};
  double fact = 1.0;
  for (int k = 0; k < kTerms; ++k) {
    if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
    sinc[k] = (k % 2 ? -1.0 : 1.0) / fact;
  }
  pw[0] = 1.0;
  for (int n = 1; n < kTerms; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += (s * k - (n - k)) * sinc[k] * pw[n - k];
    pw[n] = acc / n;
  }
  fit(
      [&](double psi) {
        double acc = 0.0;
        double z = 1.0;
        for (int k = 0; k < kTerms; ++k, z *= psi * psi) acc += pw[k] * z / (2.0 * k + 1.0 + s);
        return acc;
      },
      far_);
}

std::shared_ptr<const GProfile> GProfile::get(FracOrder order) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const GProfile>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order.value()];
  if (!slot) slot = std::make_shared<const GProfile>(order);
  return slot;
}

double GProfile::near_ratio(double theta) const noexcept { return clenshaw(near_, theta); }
double GProfile::far_ratio(double psi) const noexcept { return clenshaw(far_, psi); }

double GProfile::value(double rho) const noexcept {
  const double a = std::abs(rho);
  double g;
  if (a <= 1.0) {
    const double theta = std::atan(a);
    g = theta * near_ratio(theta);
  } else {
    const double psi = std::atan(1.0 / a);
    g = g_inf_ - std::pow(psi, 1.0 + s_) * far_ratio(psi);
  }
  return rho < 0.0 ? -g : g;
}

double GProfile::derivative(double rho) const noexcept {
  return std::pow(1.0 + rho * rho, -0.5 * (2.0 + s_));
}

double GProfile::antiderivative(double rho) const noexcept {
  const double a = std::abs(rho);
  const double lift = -std::expm1(-0.5 * s_ * std::log1p(a * a)) / s_;
  return a * value(a) - lift;
}

double GProfile::antiderivative_excess(double rho) const noexcept {
  const double a = std::abs(rho);
  if (a <= 1.0) return antiderivative(a) - g_inf_ * a;
  const double psi = std::atan(1.0 / a);
  const double lift = -std::expm1(-0.5 * s_ * std::log1p(a * a)) / s_;
  return -a * std::pow(psi, 1.0 + s_) * far_ratio(psi) - lift;
}

double g_profile(double rho, FracOrder order) { return GProfile::get(order)->value(rho); }

}  // namespace nmg
