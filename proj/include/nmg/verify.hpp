#pragma once

#include <cstdint>
#include <string>

#include "nmg/kernel.hpp"
#include "nmg/model.hpp"

namespace nmg {

enum class Relation { Less, LessEq, Equal, Greater, GreaterEq };

const char* to_string(Relation r) noexcept;

/// One inequality with both sides and a signed margin (positive = satisfied).
/// For Equal the margin is -|lhs - rhs| and the tolerance is absolute.
struct IneqReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::LessEq;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

IneqReport make_report(std::string name, double lhs, Relation rel, double rhs, double tolerance);

/// h^{2+s}/(h^2+2)^{(2+s)/2} > 2 cbar / ((1+s)(d-d0)^{1+s}); margin = theta.
IneqReport check_ks_geop(const Params& p);

/// int_{-inf}^{-d-h} u0(x) / |d0 - d - x|^{2+s} dx, piece by piece on the bump.
double datum_mass_integral(const ExteriorDatum& u0, const Params& p, const QuadratureSpec& q);

/// int_0^inf dx / (x + d - d0)^{2+s} by quadrature against 1/((1+s)(d-d0)^{1+s}).
IneqReport b_tail_integral(const Params& p, const QuadratureSpec& q);

/// int_B |X - P|^{-(2+s)} dX over B = (0, inf) x (-cbar eta, 0) for P = (pt_p, q)
/// against cbar eta / ((1+s)(d-d0)^{1+s}). Needs pt_p in (-d, -d+d0] and
/// 0 <= q <= delta, else DomainViolation.
IneqReport bump_b_bound(const Params& p, double pt_p, const QuadratureSpec& qs, double height = 0.0);

/// int_A |X - P|^{-(2+s)} dX over the region A under the positive bump,
/// against h^{2+s}/(h^2+2)^{(2+s)/2} times the datum mass integral.
/// Throws DomainViolation for P outside (-d, -d+d0) x [-delta, delta] and
/// EnvelopeViolated when max u0 + delta > 2.
IneqReport bump_a_lower(const Params& p, const Point& pt, const ExteriorDatum& u0, const QuadratureSpec& qs);

/// |X - P| <= |x - p| sqrt((h^2+2)/h^2) for `count` random X in A; lhs is the
/// largest ratio |X - P| / (|x - p| sqrt(...)), rhs = 1.
IneqReport distance_envelope(const Params& p, const Point& pt, const ExteriorDatum& u0, std::uint64_t seed,
                             int count = 100);

/// C delta + 2 cbar cstar delta/((1+s)(d-d0)^{1+s}) - cstar h^{2+s} delta/(h^2+2)^{(2+s)/2}
///   <= -cstar theta delta / 2.
/// With cstar = 4C/theta the margin is exactly C delta.
IneqReport net_curvature_margin(const Params& p, double barrier_constant, double delta);

/// X~ = (-x, 2 up - y).
Point reflect_tilde(const Point& x, double p, double up);
/// |X~ - P| <= |X - P|, the reflection taken about P = (p, up).
bool check_reflect(const Point& x, const Point& pt);
/// (|X~ - P|^2 - |X - P|^2) - 4 x p, zero up to rounding.
double reflect_identity_defect(const Point& x, const Point& pt);

}  // namespace nmg
