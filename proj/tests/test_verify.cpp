#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nmg/quadrature.hpp"
#include "nmg/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nmg;

namespace {

const QuadratureSpec kQ{};

Params preset(double s, double eta = 0.1, double barrier = 1.0) {
  return paper_params(FracOrder(s), 0.1, eta, barrier);
}

}  // namespace

TEST_CASE("report relations") {
  CHECK(make_report("a", 1.0, Relation::Less, 2.0, 0.0).pass);
  CHECK_FALSE(make_report("a", 2.0, Relation::Less, 2.0, 0.0).pass);
  CHECK(make_report("a", 2.0, Relation::LessEq, 2.0, 0.0).pass);
  CHECK(make_report("a", 2.0 + 1e-9, Relation::LessEq, 2.0, 1e-8).pass);
  CHECK_FALSE(make_report("a", 2.1, Relation::LessEq, 2.0, 1e-8).pass);
  CHECK(make_report("a", 3.0, Relation::Greater, 2.0, 0.0).margin == 1.0);
  const IneqReport eq = make_report("a", 1.0, Relation::Equal, 1.5, 0.1);
  CHECK(eq.margin == -0.5);
  CHECK_FALSE(eq.pass);
  CHECK_FALSE(make_report("a", NAN, Relation::LessEq, 1.0, 0.0).pass);
  CHECK(std::string(to_string(Relation::GreaterEq)) == ">=");
}

TEST_CASE("geometric condition holds for the preset with margin theta") {
  const IneqReport r = check_ks_geop(preset(0.5));
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(oracle::kKsLhs_s05).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(oracle::kKsRhs_s05).epsilon(1e-12));
  CHECK(r.margin == doctest::Approx(oracle::kTheta_s05).epsilon(1e-10));
  for (double s : {0.1, 0.3, 0.7, 0.9}) CHECK(check_ks_geop(preset(s)).pass);
}

TEST_CASE("geometric condition fails when the domain or the collar is too small") {
  const Params p = preset(0.5);
  const IneqReport narrow = check_ks_geop(with_half_width(p, 0.5 * p.d));
  CHECK_FALSE(narrow.pass);
  CHECK(narrow.margin < 0.0);
  const Params thin = Params::make(p.s, p.epsilon0, p.cbar, p.d, p.d0, 0.05, p.eta, p.cstar, p.d1, p.d2);
  CHECK(thin.theta < 0.0);
  CHECK_FALSE(check_ks_geop(thin).pass);
}

TEST_CASE("indicator mass is 1.6 eta at every order") {
  for (double s : {0.1, 0.5, 0.9})
    for (double eta : {0.0, 0.05, 0.1}) {
      const Params p = preset(s, eta);
      CAPTURE(s);
      CHECK(datum_mass_integral(paper_datum(p, 0.0), p, kQ) == doctest::Approx(1.6 * eta).epsilon(1e-10));
    }
}

TEST_CASE("ramped mass agrees with direct quadrature and exceeds the indicator") {
  const Params p = preset(0.5);
  const ExteriorDatum u0 = paper_datum(p, default_ramp_width(p));
  const double s = p.s.value();
  auto f = [&](double x) { return eval_datum(u0, x) * std::pow(std::abs(p.d0 - p.d - x), -2.0 - s); };
  const std::vector<double> k = u0.knots();
  double direct = 0.0;
  for (int i = 0; i < 3; ++i) direct += integrate_adaptive(f, k[i], k[i + 1], 1e-13).value;
  const double ramped = datum_mass_integral(u0, p, kQ);
  CHECK(ramped == doctest::Approx(direct).epsilon(1e-10));
  CHECK(ramped > 1.6 * p.eta);
}

TEST_CASE("the B tail integral matches its closed form") {
  for (double s : {0.1, 0.5, 0.9}) {
    const IneqReport r = b_tail_integral(preset(s), kQ);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-9));
  }
}

TEST_CASE("B bound over random points of the collar") {
  const Params p = preset(0.5);
  const double s = p.s.value();
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto prof = GProfile::get(p.s);
  for (int i = 0; i < 20; ++i) {
    const double x0 = -p.d + p.d0 * (1.0 - unit(rng));
    const double q = p.delta() * unit(rng);
    const IneqReport r = bump_b_bound(p, x0, kQ, q);
    CHECK(r.pass);
    CHECK(r.rhs == doctest::Approx(p.plateau() / ((1.0 + s) * std::pow(p.d - p.d0, 1.0 + s))));
    // Vertical integral in closed form, then the horizontal one.
    auto column = [&](double x) {
      const double dist = x - x0;
      return std::pow(dist, -1.0 - s) * (prof->value(-q / dist) - prof->value((-p.plateau() - q) / dist));
    };
    const double direct = integrate_adaptive(column, 0.0, 1.0, 1e-12).value +
                          integrate_power_tail([&](double z) { return column(z) * std::pow(z, 1.0 + s); }, 1.0, s, 1e-12).value;
    CHECK(r.lhs == doctest::Approx(direct).epsilon(1e-8));
  }
  CHECK(error_of([&] { bump_b_bound(p, -p.d, kQ, 0.0); }) == ErrorCode::DomainViolation);
  CHECK(error_of([&] { bump_b_bound(p, -p.d + p.d0 + 0.1, kQ, 0.0); }) == ErrorCode::DomainViolation);
  CHECK(error_of([&] { bump_b_bound(p, -p.d + 0.5, kQ, 2.0 * p.delta()); }) == ErrorCode::DomainViolation);
  CHECK(bump_b_bound(preset(0.5, 0.0), -p.d + 0.5, kQ, 0.0).lhs == 0.0);
}

TEST_CASE("A lower bound and the distance envelope") {
  const Params p = preset(0.5);
  const ExteriorDatum u0 = paper_datum(p, 0.0);
  const Point pt(-p.d + 0.5 * p.d0, 0.0);
  const IneqReport a = bump_a_lower(p, pt, u0, kQ);
  CHECK(a.pass);
  CHECK(a.rhs == doctest::Approx(oracle::kKsLhs_s05 * 1.6 * p.eta).epsilon(1e-9));
  const IneqReport env = distance_envelope(p, pt, u0, 3);
  CHECK(env.pass);
  CHECK(env.lhs <= 1.0);
  CHECK(error_of([&] { bump_a_lower(p, Point(-p.d + 2.0, 0.0), u0, kQ); }) == ErrorCode::DomainViolation);
  CHECK(error_of([&] { bump_a_lower(p, Point(pt.x(), 2.0 * p.delta()), u0, kQ); }) == ErrorCode::DomainViolation);
  const Params tall = preset(0.5, 0.3);
  CHECK(error_of([&] { bump_a_lower(tall, pt, paper_datum(tall, 0.0), kQ); }) == ErrorCode::EnvelopeViolated);
}

TEST_CASE("net curvature margin equals C delta") {
  for (double c : {1.0, 3.0}) {
    const Params p = preset(0.5, 0.1, c);
    const IneqReport r = net_curvature_margin(p, c, p.delta());
    CHECK(r.pass);
    CHECK(r.margin == doctest::Approx(c * p.delta()).epsilon(1e-9));
  }
}

TEST_CASE("reflection about P") {
  const Point t = reflect_tilde(Point(2.0, 1.0), -1.0, 0.5);
  CHECK(t.x() == -2.0);
  CHECK(t.y() == 0.0);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Point x(5.0 * unit(rng), 10.0 * unit(rng) - 5.0);
    const Point pt(-5.0 * unit(rng), 10.0 * unit(rng) - 5.0);
    CHECK(check_reflect(x, pt));
    CHECK(std::abs(reflect_identity_defect(x, pt)) <= 1e-12);
  }
  // With x and p on the same side the reflected point is farther away.
  CHECK_FALSE(check_reflect(Point(1.0, 0.0), Point(1.0, 0.0)));
}
