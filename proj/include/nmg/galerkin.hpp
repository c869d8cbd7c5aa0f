#pragma once

#include <Eigen/Core>

#include "nmg/g_profile.hpp"
#include "nmg/model.hpp"

namespace nmg {

/// Quadrature for the cell-pair double integrals over the line. `boost` adds
/// points to every rule; two levels give an error estimate.
struct GalerkinRule {
  int boost = 0;
  double tail_rel_tol = 1e-11;
};

/// Discrete graph energy I[u] = int int Ghat((u(x) - u(y)) / |x-y|) |x-y|^{-s} dx dy.
/// Differences of I equal differences of the fractional perimeter of the
/// subgraphs in any slab containing both graphs. Only differences are finite.
///
/// Gradient: dI/du_i = int int G(rho) (phi_i(x) - phi_i(y)) |x-y|^{-1-s} dx dy
///                   = int phi_i(x) H[u](x) dx,
/// the hat-weighted mean curvature. Length n, one entry per grid node.
Eigen::VectorXd energy_gradient(const GridFunction& u, FracOrder order, const GalerkinRule& rule = {});

/// I[u] - I[v] for two grid functions on the same grid and datum.
double energy_difference(const GridFunction& u, const GridFunction& v, FracOrder order,
                         const GalerkinRule& rule = {});

/// Gradient at the finer rule together with |fine - coarse| per node.
std::pair<Eigen::VectorXd, Eigen::VectorXd> energy_gradient_estimate(const GridFunction& u, FracOrder order);

/// Hessian of I at u = 0 for n uniform hats of spacing dx: the Toeplitz
/// matrix dx^{-s} c_{|i-j|}, c_k = -2 D4[F](k) with F(r) = |r|^{2-s}/((1+s)s(1-s)(2-s))
/// and D4 the centered fourth difference. Since G' <= 1 it dominates the
/// Hessian at every u.
Eigen::MatrixXd linearized_stiffness(int n, double dx, FracOrder order);

}  // namespace nmg
