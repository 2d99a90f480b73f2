#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypants/model.hpp"
#include "hypants/spectra.hpp"

namespace hypants {

// Rule vocabulary used by surface documents and the CLI: const:x, harmonic
// (1/n), exp:c (e^{cn}), log-shrink (1/log(n+2)).
struct LengthRule {
  enum class Kind { Const, Harmonic, Exp, LogShrink };
  Kind kind = Kind::Const;
  double param = 1.0;

  double eval(int n) const;
  std::string to_string() const;
  static LengthRule parse(const std::string& text);
};

enum class ZooKind { Flute, Ladder };

struct ZooRule {
  ZooKind kind = ZooKind::Flute;
  int N = 2;  // number of pants in the truncation (flute); rung count (ladder)
  LengthRule cuff_rule;
  LengthRule twist_rule{LengthRule::Kind::Const, 0.0};

  void validate() const;
};

// Flute: chain P_1..P_N, interior cuffs a1..a{N-1}, one free boundary per
// pants. Ladder: two parallel chains joined by rung cuffs, free boundaries
// only at the truncation ends.
MarkedSurface make_zoo_surface(const ZooRule& rule);

// gamma_n: the taut word crossing the cuff once (handle case) or twice
// (two-pants case), windings zero.
CurveWord companion_curve(const MarkedSurface& s, int cuff);
CurveWord companion_curve(const MarkedSurface& s, const std::string& cuff_label);

// The alpha* companion used by the bounded-decomposition check; same word
// family as companion_curve, exported separately.
CurveWord star_curve(const MarkedSurface& s, int cuff);

// All taut cyclic words up to max_segments, deduplicated up to rotation and
// reversal, plus all cuffs, in a deterministic order. Windings capped at
// |k| <= winding_cap half-loops.
CurveFamily enumerate_taut_words(const MarkedSurface& s, int max_segments, int winding_cap = 3);

struct BoundsProbe {
  double min_length;
  double max_length;
};
BoundsProbe probe_cuff_bounds(const MarkedSurface& s);

// Parametrized stand-in for the Shiga surface: a flute whose cuff lengths
// diverge, gamma_n the cuffs themselves (disjoint, lengths -> infinity), and
// beta_n / beta_* weighting gamma_k by its length for k <= n / k <= N.
struct ShigaFamily {
  MarkedSurface surface;
  std::vector<CurveWord> gammas;            // gamma_1..gamma_N
  std::vector<MulticurveLamination> betas;  // beta_1..beta_N
  MulticurveLamination beta_star;
  LengthRule growth;
};

ShigaFamily make_shiga_family(int N, const LengthRule& growth);

struct LboundRow {
  std::string id;
  double length;
  double rhs;
  double margin;
  bool pass;
};

struct LboundReport {
  std::vector<LboundRow> rows;
  bool pass = true;
  double worst_margin = 0.0;
};

// Per-curve check of l(delta) >= sum_k k l(gamma_k) i(gamma_k, delta).
LboundReport check_lbound(const ShigaFamily& fam, const CurveFamily& curves);

// Sweep exp:c upward until check_lbound passes on the enumerated family;
// returns the chosen c. Throws when no candidate passes.
double find_shiga_growth(int N, int max_segments, double c_step = 0.25, double c_max = 4.0);

}  // namespace hypants
