#pragma once

// Reference values computed offline with mpmath (30 digits) from the defining
// integrals, independently of the library's quadrature and Chebyshev fits.
namespace oracle {

// G(rho) = int_0^rho (1 + t^2)^{-(2+s)/2} dt.
constexpr double kG_1_s05 = 0.744303079760492874809835074824;
constexpr double kG_3_s03 = 1.13954495660242174575746354085;
constexpr double kG_02_s08 = 0.196370820150079624364391299562;
// G(inf) = sqrt(pi) Gamma((1+s)/2) / (2 Gamma(1+s/2)).
constexpr double kGinf_s01 = 1.47123427446038804352251164172;
constexpr double kGinf_s05 = 1.19814023473559220743992249228;
constexpr double kGinf_s09 = 1.0321119587573458985304777513;

// Preset constants at s = 0.5.
constexpr double kCbar_s05 = 8.48528137423857029281013234526;
constexpr double kD_s05 = 14.5893807610597782263302578763;
constexpr double kKsLhs_s05 = 0.253278561883864182443729250218;
constexpr double kKsRhs_s05 = 0.225842401816261704944789067957;
constexpr double kTheta_s05 = 0.0274361600676024774989401822615;
constexpr double kD1_s05 = 0.145531965790288350799850632078;
constexpr double kD2_s05 = 7.28317766722555778482015270184;

// L_s of [0,1]^2 with [1,2]x[0,1] and with [11,12]x[0,1], s = 0.5, by 2D
// quadrature over the offset (r, w) with triangular weights.
constexpr double kInteractionAdjacent_s05 = 3.6470875154998037424;
constexpr double kInteractionSeparated_s05 = 0.0025026005668862039206;

// Curvature of the subgraph of max(0, 1 - |x|) at x = 0.3, s = 0.5, with G
// from the hypergeometric closed form.
constexpr double kNmcTriangle03_s05 = 3.44901218501741383;

// I[v] - I[0] for v = 0.1 max(0, 1 - |x|), s = 0.5, where
// I[u] = int int Ghat((u(x) - u(y)) / |x - y|) |x - y|^{-s}, split into the
// pairs with one point outside [-1, 1] and the three triangles inside.
constexpr double kEnergyBump_s05 = 0.0415879851338074793666618669205;

}  // namespace oracle
