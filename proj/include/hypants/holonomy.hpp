#pragma once

#include "hypants/model.hpp"

namespace hypants {

// 2x2 real matrix with a separate magnitude exponent: the represented matrix
// is e^{log_scale} * [[a,b],[c,d]]. Products renormalize once entries pass
// 1e8 so long words on large-length surfaces neither overflow nor lose the
// trace magnitude.
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  double log_scale = 0.0;

  static Mat2 identity() { return Mat2{}; }
};

Mat2 mul(const Mat2& x, const Mat2& y);

// Hyperbolic translation by signed distance t along the imaginary axis
// (directed 0 -> infinity): diag(e^{t/2}, e^{-t/2}).
Mat2 axis_translation(double t);

// Transport across a pants along a seam of length s, entering and leaving a
// cuff axis perpendicular to it, interior kept on the left:
// Rot(pi/2) * axis_translation(s) * Rot(pi/2).
Mat2 seam_transport(double s);

// Direction flip picked up when a crossing re-bases the frame onto the far
// side's boundary-oriented parameterization.
Mat2 half_turn();

// log(|trace|/2) of the represented matrix.
double log_half_trace(const Mat2& m);

// Translation length 2*arccosh(|tr|/2). Throws Numeric when |tr| <= 2 + 1e-12.
double geodesic_length(const Mat2& m);

struct SeamLengths {
  double s12, s23, s31;
};

// Right-angled hexagon relation for a geodesic pair of pants with boundary
// lengths (L1, L2, L3): cosh s_ij = (cosh(Lk/2) + cosh(Li/2)cosh(Lj/2)) /
// (sinh(Li/2) sinh(Lj/2)). Stable for both tiny and huge cuffs.
SeamLengths seam_lengths(double L1, double L2, double L3);
double seam_length(double Li, double Lj, double Lk);

// Holonomy of a curve word under the surface's effective FN coordinates.
Mat2 curve_holonomy(const MarkedSurface& s, const CurveWord& w);
// Same development against an explicit coordinate assignment (used for base
// lengths and perturbation tests).
Mat2 curve_holonomy(const PantsGraph& g, const FnCoordinates& fn, const CurveWord& w);

double curve_length(const MarkedSurface& s, const CurveWord& w);
double curve_length(const PantsGraph& g, const FnCoordinates& fn, const CurveWord& w);

// Configuration of one twisted covering transformation: B(z) = e^{-l} z
// composed with the earthquake's translation on the adjacent stratum, axis
// endpoints k1 < 0 < k2 and translation length m_t.
struct TwistConfig {
  double l = 1.0;    // base translation length
  double m_t = 0.0;  // twist translation length, >= 0
  double k1 = -1.0;  // < 0
  double k2 = 1.0;   // > 0
  double t = 0.0;    // earthquake parameter; recorded, not used by the formula

  void validate() const;
};

// trace(B^t) = 2cosh((m_t-l)/2) - (2 k1/(k2-k1)) (cosh((m_t+l)/2) - cosh((m_t-l)/2))
double twisted_trace(const TwistConfig& cfg);

// Same trace assembled from explicit matrices: B = diag(e^{-l/2}, e^{l/2})
// and the hyperbolic translation with axis (k1, k2), length m_t, attracting
// endpoint k2. Returns |trace(E B)|.
double twisted_trace_oracle(const TwistConfig& cfg);

}  // namespace hypants
