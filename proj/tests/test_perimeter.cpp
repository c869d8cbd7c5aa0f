#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nmg/perimeter.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nmg;

namespace {

const FracOrder kHalf(0.5);

// 15 nodes on (-2, 2), dx = 1/4, carrying height * max(0, 1 - |x - center|).
GridFunction bump(double height, double center) {
  const GridFunction z = GridFunction::zeros(15, zero_datum(2.0));
  Eigen::VectorXd v(15);
  for (int i = 0; i < 15; ++i) v[i] = height * std::max(0.0, 1.0 - std::abs(z.node(i) - center));
  return z.with_values(v);
}

}  // namespace

TEST_CASE("equal graphs have equal perimeter") {
  const GridFunction u = bump(0.3, 0.0);
  CHECK(energy_delta(u, u, {-1.5, 1.5, 1.0}, kHalf, {}) == 0.0);
}

TEST_CASE("raising a hat costs the reference perimeter") {
  const GridFunction flat = bump(0.0, 0.0);
  const GridFunction hat = bump(0.1, 0.0);
  const double d = energy_delta(flat, hat, {-1.5, 1.5, 1.0}, kHalf, {});
  CHECK(d == doctest::Approx(-oracle::kEnergyBump_s05).epsilon(1e-9));
  CHECK(energy_delta(hat, flat, {-1.5, 1.5, 1.0}, kHalf, {}) == doctest::Approx(-d).epsilon(1e-12));
}

TEST_CASE("perimeter differences are translation invariant") {
  const double centered = energy_delta(bump(0.0, 0.0), bump(0.2, 0.0), {-1.5, 1.5, 1.0}, kHalf, {});
  const double shifted = energy_delta(bump(0.0, 0.5), bump(0.2, 0.5), {-1.0, 1.75, 1.0}, kHalf, {});
  CHECK(shifted == doctest::Approx(centered).epsilon(1e-9));
}

TEST_CASE("window preconditions") {
  const GridFunction flat = bump(0.0, 0.0);
  const GridFunction hat = bump(0.1, 0.0);
  CHECK(error_of([&] { energy_delta(flat, hat, {-0.5, 0.5, 1.0}, kHalf, {}); }) ==
        ErrorCode::GraphsDifferOutsideWindow);
  CHECK(error_of([&] { energy_delta(flat, hat, {-1.5, 1.5, 0.05}, kHalf, {}); }) == ErrorCode::WindowTooShort);
  const GridFunction other = GridFunction::zeros(15, zero_datum(2.0)).with_values(Eigen::VectorXd::Zero(15));
  const Params p = paper_params(kHalf, 0.1, 0.1);
  const GridFunction moved(Eigen::VectorXd::Zero(15), paper_datum(with_half_width(p, 2.0), 0.01));
  CHECK(error_of([&] { energy_delta(other, moved, {-1.5, 1.5, 1.0}, kHalf, {}); }) ==
        ErrorCode::GraphsDifferOutsideWindow);
}
