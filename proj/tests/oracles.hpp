// Test-only oracles, independent of the library's closed forms.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace oracles {

// Plain 2x2 arithmetic, local to the tests.
struct M22 {
  double a, b, c, d;
};

inline M22 mulm(const M22& x, const M22& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

inline M22 walk_step(double len) {
  // advance `len` along the current geodesic, then a right-angle turn
  double e = std::exp(0.5 * len);
  M22 advance{e, 0.0, 0.0, 1.0 / e};
  double r = std::sqrt(0.5);
  M22 turn{r, -r, r, r};
  return mulm(advance, turn);
}

// Closes the right-angled hexagon with alternate sides (a1, a2, a3) by
// solving for the remaining three sides with Newton iteration on the
// closure condition (the six-step walk is +-identity). Returns (s12, s23,
// s31), the sides opposite a3, a1, a2 in walk order a1 s12 a2 s23 a3 s31.
inline std::array<double, 3> hexagon_solve(double a1, double a2, double a3) {
  auto residual = [&](const std::array<double, 3>& s, double out[3]) {
    M22 f{1, 0, 0, 1};
    const double sides[6] = {a1, s[0], a2, s[1], a3, s[2]};
    for (double side : sides) f = mulm(f, walk_step(side));
    // f should be a scalar multiple of the identity
    double scale = 0.5 * (std::fabs(f.a) + std::fabs(f.d));
    out[0] = f.b / scale;
    out[1] = f.c / scale;
    out[2] = (f.a - f.d) / scale;
  };
  auto norm_at = [&](const std::array<double, 3>& s) {
    double r[3];
    residual(s, r);
    return std::fabs(r[0]) + std::fabs(r[1]) + std::fabs(r[2]);
  };

  // multi-start damped Newton; the hexagon is unique so any converged root is it
  const double starts[5] = {0.25, 0.5, 1.0, 2.0, 4.0};
  std::array<double, 3> best{1.0, 1.0, 1.0};
  double best_norm = norm_at(best);
  for (double g0 : starts)
    for (double g1 : starts)
      for (double g2 : starts) {
        std::array<double, 3> cand{g0, g1, g2};
        double n = norm_at(cand);
        if (n < best_norm) {
          best_norm = n;
          best = cand;
        }
      }

  std::array<double, 3> s = best;
  for (int iter = 0; iter < 400; ++iter) {
    double r0[3];
    residual(s, r0);
    double norm = std::fabs(r0[0]) + std::fabs(r0[1]) + std::fabs(r0[2]);
    if (norm < 1e-13) return s;
    // numeric Jacobian
    double J[3][3];
    for (int j = 0; j < 3; ++j) {
      double h = 1e-7 * (1.0 + std::fabs(s[j]));
      auto sp = s;
      sp[j] += h;
      double r1[3];
      residual(sp, r1);
      for (int i = 0; i < 3; ++i) J[i][j] = (r1[i] - r0[i]) / h;
    }
    // solve J dx = -r0 by Gaussian elimination
    double A[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) A[i][j] = J[i][j];
      A[i][3] = -r0[i];
    }
    bool singular = false;
    for (int col = 0; col < 3 && !singular; ++col) {
      int piv = col;
      for (int i = col + 1; i < 3; ++i)
        if (std::fabs(A[i][col]) > std::fabs(A[piv][col])) piv = i;
      for (int j = 0; j < 4; ++j) std::swap(A[col][j], A[piv][j]);
      if (std::fabs(A[col][col]) < 1e-300) {
        singular = true;
        break;
      }
      for (int i = 0; i < 3; ++i) {
        if (i == col) continue;
        double f = A[i][col] / A[col][col];
        for (int j = col; j < 4; ++j) A[i][j] -= f * A[col][j];
      }
    }
    double dx[3];
    if (singular) {
      for (int i = 0; i < 3; ++i) dx[i] = -0.1 * r0[i];  // gradient-ish nudge
    } else {
      for (int i = 0; i < 3; ++i) dx[i] = A[i][3] / A[i][i];
    }
    // backtracking: accept the first step that reduces the residual
    double step = 1.0;
    for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
      std::array<double, 3> cand;
      bool positive = true;
      for (int i = 0; i < 3; ++i) {
        cand[i] = s[i] + step * dx[i];
        positive = positive && cand[i] > 1e-9;
      }
      if (!positive) continue;
      if (norm_at(cand) < norm) {
        s = cand;
        break;
      }
    }
  }
  if (norm_at(s) < 1e-10) return s;
  throw std::runtime_error("hexagon solver did not converge");
}

// Arc length a geodesic needs to move distance `depth` away from a geodesic
// it crosses at angle theta: sinh(depth) = sin(theta) sinh(t).
inline double escape_length(double depth, double theta) {
  return std::asinh(std::sinh(depth) / std::sin(theta));
}

// --- polyline developer ------------------------------------------------------
//
// Develops a piecewise-geodesic path in the upper half-plane as explicit
// (point, direction) states: geodesics realized as Euclidean circles centred
// on the real axis, arc length flowed in closed form. Independent of the
// library's matrix transports; only the final frame is converted to a matrix
// to read off the holonomy trace.

struct PathState {
  double x, y;    // point, y > 0
  double theta;   // direction angle of the unit tangent
};

inline void advance(PathState& s, double d) {
  double c = std::cos(s.theta);
  if (std::fabs(c) < 1e-13) {
    // vertical geodesic
    s.y *= std::exp(std::sin(s.theta) > 0 ? d : -d);
    return;
  }
  double center = s.x + s.y * std::tan(s.theta);
  double r = s.y / std::fabs(c);
  double phi = std::atan2(s.y, s.x - center);  // in (0, pi)
  // tangent along +phi has angle phi + pi/2; compare with the direction
  double fwd = std::remainder(s.theta - (phi + 3.14159265358979323846 / 2.0),
                              2.0 * 3.14159265358979323846);
  bool increasing = std::fabs(fwd) < 3.14159265358979323846 / 2.0;
  double t0 = std::log(std::tan(0.5 * phi));
  double t1 = t0 + (increasing ? d : -d);
  double phi1 = 2.0 * std::atan(std::exp(t1));
  s.x = center + r * std::cos(phi1);
  s.y = r * std::sin(phi1);
  s.theta = phi1 + (increasing ? 1.0 : -1.0) * 3.14159265358979323846 / 2.0;
}

inline void turn(PathState& s, double angle) { s.theta += angle; }

// matrix of the isometry taking the base frame (i, pointing up) to (z, theta)
inline M22 frame_matrix(const PathState& s) {
  double sy = std::sqrt(s.y);
  M22 translate{1.0, s.x, 0.0, 1.0};
  M22 scale{sy, 0.0, 0.0, 1.0 / sy};
  double half = 0.5 * (s.theta - 3.14159265358979323846 / 2.0);
  // rotation about i moving tangents by +alpha
  M22 rot{std::cos(half), std::sin(half), -std::sin(half), std::cos(half)};
  return mulm(mulm(translate, scale), rot);
}

}  // namespace oracles
