#include "hypants/holonomy.hpp"

#include <algorithm>
#include <cmath>

namespace hypants {

namespace {

constexpr double kRescaleThreshold = 1e8;

void renormalize(Mat2& m) {
  double mx = std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                       std::max(std::fabs(m.c), std::fabs(m.d)));
  if (mx > kRescaleThreshold) {
    m.a /= mx;
    m.b /= mx;
    m.c /= mx;
    m.d /= mx;
    m.log_scale += std::log(mx);
  }
}

double log_cosh(double x) {
  x = std::fabs(x);
  return x - std::log(2.0) + std::log1p(std::exp(-2.0 * x));
}

double log_sinh(double x) {  // x > 0
  if (x < 1e-8) return std::log(x) + x * x / 6.0;
  return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

}  // namespace

Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a = x.a * y.a + x.b * y.c;
  r.b = x.a * y.b + x.b * y.d;
  r.c = x.c * y.a + x.d * y.c;
  r.d = x.c * y.b + x.d * y.d;
  r.log_scale = x.log_scale + y.log_scale;
  renormalize(r);
  return r;
}

Mat2 axis_translation(double t) {
  Mat2 m;
  double h = 0.5 * t;
  if (std::fabs(h) < 300.0) {
    m.a = std::exp(h);
    m.d = std::exp(-h);
  } else {
    // keep entries bounded, push the magnitude into the exponent
    m.a = 1.0;
    m.d = std::exp(-std::fabs(t));  // may underflow to 0: geometrically immaterial
    m.log_scale = std::fabs(h);
    if (t < 0.0) std::swap(m.a, m.d);
  }
  m.b = m.c = 0.0;
  return m;
}

Mat2 seam_transport(double s) {
  // Rot(pi/2) A(s) Rot(pi/2) = [[sinh(s/2), cosh(s/2)], [-cosh(s/2), -sinh(s/2)]]
  Mat2 m;
  double h = 0.5 * s;
  if (std::fabs(h) < 300.0) {
    m.a = std::sinh(h);
    m.b = std::cosh(h);
  } else {
    double e = std::exp(-2.0 * std::fabs(h));
    m.a = 0.5 * (1.0 - e);
    m.b = 0.5 * (1.0 + e);
    if (s < 0.0) m.a = -m.a;
    m.log_scale = std::fabs(h);
  }
  m.c = -m.b;
  m.d = -m.a;
  return m;
}

Mat2 half_turn() {
  Mat2 m;
  m.a = 0.0;
  m.b = 1.0;
  m.c = -1.0;
  m.d = 0.0;
  return m;
}

double log_half_trace(const Mat2& m) {
  double tr = m.a + m.d;
  return std::log(std::fabs(tr) / 2.0) + m.log_scale;
}

double geodesic_length(const Mat2& m) {
  double lht = log_half_trace(m);
  // |tr|/2 representable: use acosh directly for best accuracy near 1
  if (lht < 300.0) {
    double x = std::exp(lht);
    if (!(x > 1.0 + 5e-13))
      fail(ErrorCode::Numeric, "non-hyperbolic element: |trace| <= 2 + 1e-12");
    return 2.0 * std::acosh(x);
  }
  // acosh(x) = log(2x) up to O(x^-2)
  return 2.0 * (lht + std::log(2.0));
}

double seam_length(double Li, double Lj, double Lk) {
  if (!(Li > 0.0) || !(Lj > 0.0) || !(Lk > 0.0))
    fail(ErrorCode::Domain, "nonpositive length in seam computation");
  // cosh s = coth(Li/2) coth(Lj/2) + cosh(Lk/2)/(sinh(Li/2) sinh(Lj/2)),
  // assembled as 1 + u with u kept stable across the whole range.
  double ai = 2.0 / std::expm1(Li);  // coth(Li/2) = 1 + ai
  double aj = 2.0 / std::expm1(Lj);
  double log_t2 = log_cosh(0.5 * Lk) - log_sinh(0.5 * Li) - log_sinh(0.5 * Lj);
  double t2 = std::exp(log_t2);
  double u = ai + aj + ai * aj + t2;
  if (u < 1e-8) {
    // arccosh(1+u) = sqrt(2u) (1 - u/12 + 3u^2/160 - ...)
    return std::sqrt(2.0 * u) * (1.0 - u / 12.0 + 3.0 * u * u / 160.0);
  }
  return std::acosh(1.0 + u);
}

SeamLengths seam_lengths(double L1, double L2, double L3) {
  return SeamLengths{seam_length(L1, L2, L3), seam_length(L2, L3, L1), seam_length(L3, L1, L2)};
}

namespace {

// Seam-foot convention: on the boundary circle of slot j (boundary oriented,
// pants interior on the left), the foot of the seam toward slot j+1 sits at
// parameter 0 and the foot toward slot j+2 at half the cuff length. A
// crossing at parameter x re-bases the frame to parameter tau + k*L - x on
// the far side, where the winding k counts signed full loops around the
// crossed cuff (k = +-1 is a full Dehn twist applied to the crossing).
int next_slot(int s) { return (s + 1) % 3; }

double foot_pos(const PantsGraph& g, const FnCoordinates& fn, SlotRef at, SlotRef toward) {
  if (toward.slot == next_slot(at.slot)) return 0.0;
  return 0.5 * fn.length(g.cuff_at(at));
}

double seam_between(const PantsGraph& g, const FnCoordinates& fn, SlotRef a, SlotRef b) {
  const PantsNode& p = g.pants(a.pants);
  int other = 3 - a.slot - b.slot;
  return seam_length(fn.length(p.cuff_at_slot[a.slot]), fn.length(p.cuff_at_slot[b.slot]),
                     fn.length(p.cuff_at_slot[other]));
}

struct SegmentGeometry {
  double depart_foot;   // on the entry circle
  double arrive_foot;   // on the exit circle, before winding
  Mat2 in_pants;        // transport between the two feet
};

SegmentGeometry segment_geometry(const PantsGraph& g, const FnCoordinates& fn,
                                 const PathSegment& seg) {
  SegmentGeometry out;
  if (seg.enter == seg.exit) {
    // essential wrapping arc: seam to the next slot, once around it, seam back
    SlotRef j{seg.enter.pants, next_slot(seg.enter.slot)};
    double s = seam_between(g, fn, seg.enter, j);
    double Lj = fn.length(g.cuff_at(j));
    out.depart_foot = foot_pos(g, fn, seg.enter, j);
    out.arrive_foot = out.depart_foot;
    out.in_pants = mul(mul(seam_transport(s), axis_translation(Lj)), seam_transport(s));
  } else {
    out.depart_foot = foot_pos(g, fn, seg.enter, seg.exit);
    out.arrive_foot = foot_pos(g, fn, seg.exit, seg.enter);
    out.in_pants = seam_transport(seam_between(g, fn, seg.enter, seg.exit));
  }
  return out;
}

}  // namespace

Mat2 curve_holonomy(const PantsGraph& g, const FnCoordinates& fn, const CurveWord& w) {
  w.validate(g);
  if (w.is_cuff()) return axis_translation(fn.length(w.cuff_index()));

  const auto& segs = w.segments();
  int m = static_cast<int>(segs.size());

  std::vector<SegmentGeometry> geo(m);
  std::vector<double> entry_pos(m);  // entry parameter, set by the previous crossing
  for (int i = 0; i < m; ++i) {
    geo[i] = segment_geometry(g, fn, segs[i]);
    // The crossing happens at the arrival foot; the winding selects the lift
    // of the gluing, shifting the far-side entry by whole cuff lengths.
    int cuff = g.cuff_at(segs[i].exit);
    double c = fn.twist(cuff) + segs[i].winding * fn.length(cuff);
    entry_pos[(i + 1) % m] = c - geo[i].arrive_foot;
  }

  Mat2 h = Mat2::identity();
  for (int i = 0; i < m; ++i) {
    h = mul(h, axis_translation(geo[i].depart_foot - entry_pos[i]));
    h = mul(h, geo[i].in_pants);
    h = mul(h, half_turn());
  }
  return h;
}

Mat2 curve_holonomy(const MarkedSurface& s, const CurveWord& w) {
  if (!s.pending()) return curve_holonomy(s.graph(), s.stored_fn(), w);
  return curve_holonomy(s.graph(), s.effective_fn(), w);
}

double curve_length(const MarkedSurface& s, const CurveWord& w) {
  return geodesic_length(curve_holonomy(s, w));
}

double curve_length(const PantsGraph& g, const FnCoordinates& fn, const CurveWord& w) {
  return geodesic_length(curve_holonomy(g, fn, w));
}

void TwistConfig::validate() const {
  if (!(l > 0.0)) fail(ErrorCode::Domain, "TwistConfig: l must be positive");
  if (!(m_t >= 0.0)) fail(ErrorCode::Domain, "TwistConfig: m_t must be nonnegative");
  if (!(k1 < 0.0) || !(k2 > 0.0)) fail(ErrorCode::Domain, "TwistConfig: need k1 < 0 < k2");
}

double twisted_trace(const TwistConfig& cfg) {
  cfg.validate();
  double dm = 0.5 * (cfg.m_t - cfg.l);
  double dp = 0.5 * (cfg.m_t + cfg.l);
  return 2.0 * std::cosh(dm) - (2.0 * cfg.k1 / (cfg.k2 - cfg.k1)) * (std::cosh(dp) - std::cosh(dm));
}

double twisted_trace_oracle(const TwistConfig& cfg) {
  cfg.validate();
  // conjugate diag(e^{m/2}, e^{-m/2}) by g = [[k2, k1], [1, 1]] / sqrt(k2-k1)
  double x = std::exp(0.5 * cfg.m_t);
  double det = cfg.k2 - cfg.k1;
  // E = g diag(x, 1/x) g^{-1}
  double e11 = (cfg.k2 * x - cfg.k1 / x) / det;
  double e12 = (-cfg.k1 * cfg.k2 * x + cfg.k1 * cfg.k2 / x) / det;
  double e21 = (x - 1.0 / x) / det;
  double e22 = (-cfg.k1 * x + cfg.k2 / x) / det;
  double y = std::exp(-0.5 * cfg.l);
  (void)e12;
  (void)e21;
  // trace(E * B), B = diag(y, 1/y)
  return std::fabs(e11 * y + e22 / y);
}

}  // namespace hypants
