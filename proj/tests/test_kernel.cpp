#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "graph_suite.hpp"
#include "nmg/error.hpp"
#include "nmg/kernel.hpp"
#include "oracles.hpp"

using namespace nmg;

TEST_CASE("half-plane and affine graphs have zero curvature") {
  const QuadratureSpec q;
  const FracOrder s(0.5);
  CHECK(std::abs(nmc_graph(PiecewiseLinear::affine(0.0, 0.0), 0.7, s, q).value) <= q.abs_tol);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> slope(-3.0, 3.0), point(-20.0, 20.0);
  for (int k = 0; k < 5; ++k) {
    const auto u = PiecewiseLinear::affine(slope(rng), slope(rng));
    for (int i = 0; i < 20; ++i) CHECK(std::abs(nmc_graph(u, point(rng), s, q).value) <= q.abs_tol);
  }
}

TEST_CASE("piecewise-linear steps") {
  const PiecewiseLinear z({-2.0, -1.0, 0.0, 1.0, 2.0}, {0.0, 0.5, -0.3, 0.4, 0.0}, 0.3, -0.2);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> pick(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double a = pick(rng), t = pick(rng);
    CHECK(z.step(a, t) == doctest::Approx(z(a + t) - z(a)).epsilon(1e-13).scale(1.0));
    CHECK(z.increment(a, a + t) == doctest::Approx(z(a + t) - z(a)).epsilon(1e-13).scale(1.0));
  }
  // A knot without a slope change leaves +t and -t steps exactly antisymmetric.
  const PiecewiseLinear line({-1.0, 3.0}, {-1.7, 3.0 * 1.7}, 1.7, 1.7);
  for (double t : {0.1, 1.3, 2.9, 7.7}) CHECK(line.step(0.4, t) == -line.step(0.4, -t));
}

TEST_CASE("triangle curvature matches the reference") {
  const PiecewiseLinear tri({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0});
  const Estimate h = nmc_graph(tri, 0.3, FracOrder(0.5), QuadratureSpec{});
  CHECK(h.value == doctest::Approx(oracle::kNmcTriangle03_s05).epsilon(1e-9));
}

TEST_CASE("graph reduction agrees with the slice-by-slice set integral") {
  const QuadratureSpec q;
  for (const auto& c : graph_suite()) {
    const FracOrder s(c.s);
    const Estimate g = nmc_graph(c.graph, c.x0, s, q);
    const Estimate b = nmc_set_bruteforce(RegionSet(c.graph), Point(c.x0, c.graph(c.x0)), s, q);
    CAPTURE(c.name);
    CHECK(std::abs(g.value - b.value) <= 3.0 * (g.error + b.error));
  }
}

TEST_CASE("odd reflection flips the curvature") {
  const QuadratureSpec q;
  for (const auto& c : graph_suite()) {
    const FracOrder s(c.s);
    const PiecewiseLinear v = c.graph.odd_reflection();
    const Estimate a = nmc_graph(c.graph, c.x0, s, q);
    const Estimate b = nmc_graph(v, -c.x0, s, q);
    CHECK(a.value == doctest::Approx(-b.value).epsilon(1e-9));
  }
}

TEST_CASE("kinks are rejected") {
  const PiecewiseLinear tri({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0});
  try {
    nmc_graph(tri, 0.0, FracOrder(0.5), QuadratureSpec{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonconvergedQuadrature);
  }
}

TEST_CASE("set integral symmetries") {
  const QuadratureSpec q;
  const FracOrder s(0.5);
  const RegionSet half(PiecewiseLinear::affine(0.0, 0.0));
  CHECK(std::abs(nmc_set_bruteforce(half, Point(0.0, 0.0), s, q).value) <= q.abs_tol);
  // Removing R below and adding its point reflection above cancel at P = 0.
  const Rect removed{2.0, 3.0, -2.0, -1.0};
  const Rect added{-3.0, -2.0, 1.0, 2.0};
  const RegionSet e(PiecewiseLinear::affine(0.0, 0.0), {added}, {removed});
  CHECK(std::abs(nmc_set_bruteforce(e, Point(0.0, 0.0), s, q).value) <= 1e-9);
  // Removing alone lowers the curvature.
  const RegionSet only(PiecewiseLinear::affine(0.0, 0.0), {}, {removed});
  CHECK(nmc_set_bruteforce(only, Point(0.0, 0.0), s, q).value > 0.0);
}

TEST_CASE("set integral requires a boundary point") {
  const RegionSet half(PiecewiseLinear::affine(0.0, 0.0));
  try {
    nmc_set_bruteforce(half, Point(0.0, 1.0), FracOrder(0.5), QuadratureSpec{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointNotOnBoundary);
  }
}

TEST_CASE("region sets validate their rectangles") {
  const auto flat = PiecewiseLinear::affine(0.0, 0.0);
  CHECK_THROWS_AS(RegionSet(flat, {Rect{0.0, 1.0, -0.5, 1.0}}), Error);
  CHECK_THROWS_AS(RegionSet(flat, {}, {Rect{0.0, 1.0, -0.5, 0.5}}), Error);
  CHECK_NOTHROW(RegionSet(flat, {Rect{0.0, 1.0, 0.0, 1.0}}, {Rect{0.0, 1.0, -1.0, 0.0}}));
}

TEST_CASE("interaction matches references") {
  const QuadratureSpec q;
  const FracOrder s(0.5);
  const Rect a{0.0, 1.0, 0.0, 1.0};
  const Rect right{1.0, 2.0, 0.0, 1.0};
  const Rect above{0.0, 1.0, 1.0, 2.0};
  const Rect far{11.0, 12.0, 0.0, 1.0};
  CHECK(interaction(a, right, s, q).value == doctest::Approx(oracle::kInteractionAdjacent_s05).epsilon(1e-9));
  CHECK(interaction(a, above, s, q).value == doctest::Approx(oracle::kInteractionAdjacent_s05).epsilon(1e-9));
  const double sep = interaction(a, far, s, q).value;
  CHECK(sep == doctest::Approx(oracle::kInteractionSeparated_s05).epsilon(1e-9));
  // Far field: area * area / dist^{2+s} between centres, within 5%.
  CHECK(sep == doctest::Approx(std::pow(11.0, -2.5)).epsilon(0.05));
}

TEST_CASE("interaction symmetry, translation invariance, monotonicity") {
  const QuadratureSpec q;
  const FracOrder s(0.3);
  const Rect a{0.0, 1.5, -0.5, 0.2};
  const Rect b{1.5, 2.0, 0.2, 3.0};  // shares the corner (1.5, 0.2)
  const Rect b_small{1.5, 1.8, 0.2, 1.0};
  const double ab = interaction(a, b, s, q).value;
  CHECK(ab > 0.0);
  CHECK(interaction(b, a, s, q).value == doctest::Approx(ab).epsilon(1e-9));
  CHECK(interaction(a.translated(3.2, -7.1), b.translated(3.2, -7.1), s, q).value == doctest::Approx(ab).epsilon(1e-9));
  CHECK(interaction(a, b_small, s, q).value < ab);
}

TEST_CASE("overlapping rectangles are rejected") {
  try {
    interaction(Rect{0, 1, 0, 1}, Rect{0.5, 2, 0.5, 2}, FracOrder(0.5), QuadratureSpec{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverlappingRegions);
  }
}

TEST_CASE("QuadratureSpec validation") {
  QuadratureSpec q;
  q.singular_width = 50.0;
  CHECK_THROWS_AS(q.validate(), Error);
  q = QuadratureSpec{};
  q.rel_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), Error);
}
