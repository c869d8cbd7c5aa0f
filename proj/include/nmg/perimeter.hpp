#pragma once

#include "nmg/g_profile.hpp"
#include "nmg/kernel.hpp"
#include "nmg/model.hpp"

namespace nmg {

/// Omega_L = (a, b) x (-L, L).
struct EnergyWindow {
  double a = -1.0;
  double b = 1.0;
  double L = 1.0;
};

/// Per_s(E_u, Omega_L) - Per_s(E_v, Omega_L) for subgraphs of grid functions
/// that agree outside (a, b). Only cell pairs touching the region where the
/// graphs differ are integrated, so the (infinite) perimeters never appear.
/// Throws GraphsDifferOutsideWindow or WindowTooShort.
double energy_delta(const GridFunction& u, const GridFunction& v, const EnergyWindow& w, FracOrder order,
                    const QuadratureSpec& q);

}  // namespace nmg
