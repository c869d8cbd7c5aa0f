#include "nmg/perimeter.hpp"

#include <cmath>

#include "nmg/error.hpp"
#include "nmg/galerkin.hpp"

namespace nmg {

double energy_delta(const GridFunction& u, const GridFunction& v, const EnergyWindow& w, FracOrder order,
                    const QuadratureSpec& q) {
  q.validate();
  require(w.a < w.b && w.L > 0.0, "invalid window");
  require(u.size() == v.size() && u.half_width() == v.half_width(), "graphs must share the grid");
  if (!(u.datum() == v.datum())) fail(ErrorCode::GraphsDifferOutsideWindow, "exterior data differ");
  double sup = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    const double du = u.values()[i];
    const double dv = v.values()[i];
    if (du != dv) {
      // The hat of node i must stay inside the window.
      if (u.node(i) - u.spacing() < w.a || u.node(i) + u.spacing() > w.b)
        fail(ErrorCode::GraphsDifferOutsideWindow, "graphs differ at a node whose hat leaves (a, b)");
    }
    if (u.node(i) > w.a && u.node(i) < w.b) sup = std::max({sup, std::abs(du), std::abs(dv)});
  }
  for (double x : {w.a, w.b})
    if (x > -u.half_width() && x < u.half_width()) sup = std::max({sup, std::abs(u(x)), std::abs(v(x))});
  if (!(w.L > sup)) fail(ErrorCode::WindowTooShort, "L must exceed both graphs in the window");
  if (u.values() == v.values()) return 0.0;
  return energy_difference(u, v, order, GalerkinRule{0, 0.1 * q.rel_tol});
}

}  // namespace nmg
