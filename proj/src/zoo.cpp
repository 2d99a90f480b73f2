#include "hypants/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "hypants/holonomy.hpp"

namespace hypants {

double LengthRule::eval(int n) const {
  if (n < 1) n = 1;
  switch (kind) {
    case Kind::Const:
      return param;
    case Kind::Harmonic:
      return 1.0 / n;
    case Kind::Exp:
      return std::exp(param * n);
    case Kind::LogShrink:
      return 1.0 / std::log(n + 2.0);
  }
  fail(ErrorCode::Internal, "unreachable rule kind");
}

std::string LengthRule::to_string() const {
  char buf[64];
  switch (kind) {
    case Kind::Const:
      std::snprintf(buf, sizeof buf, "const:%.17g", param);
      return buf;
    case Kind::Harmonic:
      return "harmonic";
    case Kind::Exp:
      std::snprintf(buf, sizeof buf, "exp:%.17g", param);
      return buf;
    case Kind::LogShrink:
      return "log-shrink";
  }
  fail(ErrorCode::Internal, "unreachable rule kind");
}

LengthRule LengthRule::parse(const std::string& text) {
  LengthRule r;
  if (text == "harmonic") {
    r.kind = Kind::Harmonic;
    return r;
  }
  if (text == "log-shrink") {
    r.kind = Kind::LogShrink;
    return r;
  }
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  if (colon == std::string::npos || (head != "const" && head != "exp"))
    fail(ErrorCode::Parse, "unknown rule '" + text + "'");
  r.kind = head == "const" ? Kind::Const : Kind::Exp;
  try {
    size_t used = 0;
    r.param = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "malformed rule parameter in '" + text + "'");
  }
  return r;
}

void ZooRule::validate() const {
  if (N < 2) fail(ErrorCode::InvalidArgument, "invalid rule: N must be at least 2");
  for (int n = 1; n <= N; ++n)
    if (!(cuff_rule.eval(n) > 0.0) || !std::isfinite(cuff_rule.eval(n)))
      fail(ErrorCode::Domain, "invalid rule: nonpositive cuff length at n=" + std::to_string(n));
}

namespace {

MarkedSurface finish(std::shared_ptr<PantsGraph> graph, FnCoordinates fn) {
  graph->validate();
  FnCoordinates base = fn;
  return MarkedSurface(std::move(graph), std::move(fn), std::move(base));
}

}  // namespace

MarkedSurface make_zoo_surface(const ZooRule& rule) {
  rule.validate();
  auto graph = std::make_shared<PantsGraph>();
  FnCoordinates fn;
  auto push = [&](double len, double tw) { fn.by_cuff.push_back(FnEntry{len, tw}); };

  if (rule.kind == ZooKind::Flute) {
    for (int i = 1; i <= rule.N; ++i) graph->add_pants("P" + std::to_string(i));
    graph->add_cuff("f0", SlotRef{0, 0});
    push(rule.cuff_rule.eval(1), 0.0);
    for (int i = 1; i < rule.N; ++i) {
      graph->add_cuff("a" + std::to_string(i), SlotRef{i - 1, 1}, SlotRef{i, 0});
      push(rule.cuff_rule.eval(i), rule.twist_rule.eval(i));
    }
    graph->add_cuff("f" + std::to_string(rule.N), SlotRef{rule.N - 1, 1});
    push(rule.cuff_rule.eval(rule.N), 0.0);
    for (int i = 1; i <= rule.N; ++i) {
      graph->add_cuff("b" + std::to_string(i), SlotRef{i - 1, 2});
      push(rule.cuff_rule.eval(i), 0.0);
    }
    return finish(std::move(graph), std::move(fn));
  }

  // ladder: top strand P_i, bottom strand Q_i, rungs r_i
  for (int i = 1; i <= rule.N; ++i) graph->add_pants("P" + std::to_string(i));
  for (int i = 1; i <= rule.N; ++i) graph->add_pants("Q" + std::to_string(i));
  auto top = [&](int i) { return i - 1; };
  auto bot = [&](int i) { return rule.N + i - 1; };
  graph->add_cuff("tf0", SlotRef{top(1), 0});
  push(rule.cuff_rule.eval(1), 0.0);
  graph->add_cuff("uf0", SlotRef{bot(1), 0});
  push(rule.cuff_rule.eval(1), 0.0);
  for (int i = 1; i < rule.N; ++i) {
    graph->add_cuff("t" + std::to_string(i), SlotRef{top(i), 1}, SlotRef{top(i + 1), 0});
    push(rule.cuff_rule.eval(i), rule.twist_rule.eval(i));
    graph->add_cuff("u" + std::to_string(i), SlotRef{bot(i), 1}, SlotRef{bot(i + 1), 0});
    push(rule.cuff_rule.eval(i), rule.twist_rule.eval(i));
  }
  graph->add_cuff("tf" + std::to_string(rule.N), SlotRef{top(rule.N), 1});
  push(rule.cuff_rule.eval(rule.N), 0.0);
  graph->add_cuff("uf" + std::to_string(rule.N), SlotRef{bot(rule.N), 1});
  push(rule.cuff_rule.eval(rule.N), 0.0);
  for (int i = 1; i <= rule.N; ++i) {
    graph->add_cuff("r" + std::to_string(i), SlotRef{top(i), 2}, SlotRef{bot(i), 2});
    push(rule.cuff_rule.eval(i), rule.twist_rule.eval(i));
  }
  return finish(std::move(graph), std::move(fn));
}

CurveWord companion_curve(const MarkedSurface& s, int cuff) {
  const PantsGraph& g = s.graph();
  if (cuff < 0 || cuff >= g.cuff_count())
    fail(ErrorCode::InvalidArgument, "companion of unknown cuff");
  const Cuff& c = g.cuff(cuff);
  if (!c.interior())
    fail(ErrorCode::Domain, "companion of free-boundary cuff " + c.label);
  if (c.end_a.pants == c.end_b.pants) {
    // handle: one arc through the pants, crossing the cuff once
    return CurveWord::path({PathSegment{c.end_a, c.end_b, 0}});
  }
  return CurveWord::path({PathSegment{c.end_a, c.end_a, 0}, PathSegment{c.end_b, c.end_b, 0}});
}

CurveWord companion_curve(const MarkedSurface& s, const std::string& cuff_label) {
  return companion_curve(s, s.graph().cuff_index(cuff_label));
}

CurveWord star_curve(const MarkedSurface& s, int cuff) { return companion_curve(s, cuff); }

CurveFamily enumerate_taut_words(const MarkedSurface& s, int max_segments, int winding_cap) {
  if (max_segments < 1) fail(ErrorCode::InvalidArgument, "max_segments must be at least 1");
  if (winding_cap < 0) fail(ErrorCode::InvalidArgument, "winding_cap must be nonnegative");
  const PantsGraph& g = s.graph();

  std::vector<CurveWord> words;
  for (int c = 0; c < g.cuff_count(); ++c) words.push_back(CurveWord::cuff(c));

  std::vector<SlotRef> interior_slots;
  for (int p = 0; p < g.pants_count(); ++p)
    for (int k = 0; k < 3; ++k)
      if (!g.is_free_slot(SlotRef{p, k})) interior_slots.push_back(SlotRef{p, k});

  std::map<std::vector<long long>, CurveWord> seen;
  std::vector<PathSegment> stack;

  std::function<void(SlotRef, SlotRef)> dfs = [&](SlotRef start, SlotRef enter) {
    for (int k = 0; k < 3; ++k) {
      SlotRef exit{enter.pants, k};
      if (g.is_free_slot(exit)) continue;
      for (int w = -winding_cap; w <= winding_cap; ++w) {
        stack.push_back(PathSegment{enter, exit, w});
        SlotRef next = g.partner(exit);
        if (next == start) {
          CurveWord word = CurveWord::path(stack);
          bool ok = true;
          try {
            word.validate(g);
          } catch (const Error&) {
            ok = false;
          }
          if (ok) {
            auto key = word.canonical_key();
            if (!seen.count(key)) seen.emplace(std::move(key), std::move(word));
          }
        }
        if (static_cast<int>(stack.size()) < max_segments) dfs(start, next);
        stack.pop_back();
      }
    }
  };

  for (SlotRef start : interior_slots) dfs(start, start);

  std::vector<std::pair<std::pair<size_t, std::vector<long long>>, CurveWord>> ordered;
  ordered.reserve(seen.size());
  for (auto& [key, word] : seen)
    ordered.push_back({{word.segments().size(), key}, std::move(word)});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rank, word] : ordered) words.push_back(std::move(word));
  return make_family(g, std::move(words));
}

BoundsProbe probe_cuff_bounds(const MarkedSurface& s) {
  BoundsProbe p{std::numeric_limits<double>::infinity(), 0.0};
  for (int c = 0; c < s.graph().cuff_count(); ++c) {
    p.min_length = std::min(p.min_length, s.length(c));
    p.max_length = std::max(p.max_length, s.length(c));
  }
  return p;
}

ShigaFamily make_shiga_family(int N, const LengthRule& growth) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "invalid growth: N must be positive");
  for (int n = 1; n <= N; ++n)
    if (!(growth.eval(n + 1) > growth.eval(n)))
      fail(ErrorCode::Domain, "invalid growth: rule is not increasing at n=" + std::to_string(n));

  // Flute on N+1 pants so gamma_1..gamma_N are all interior, with cuff
  // lengths growth(n). The truncation funnels are scaled up by 8N: turning a
  // curve around at pants n means wrapping past a funnel, and the wrap cost
  // ~ funnel/2 has to dominate the n-weighted sum in the lower bound. The
  // scale stays small enough that no seam underflows at desk parameters.
  double funnel_scale = 8.0 * N;
  int P = N + 1;
  auto graph = std::make_shared<PantsGraph>();
  FnCoordinates fn;
  auto push = [&](double len, double tw) { fn.by_cuff.push_back(FnEntry{len, tw}); };
  for (int i = 1; i <= P; ++i) graph->add_pants("P" + std::to_string(i));
  graph->add_cuff("f0", SlotRef{0, 0});
  push(funnel_scale * growth.eval(1), 0.0);
  for (int i = 1; i < P; ++i) {
    graph->add_cuff("a" + std::to_string(i), SlotRef{i - 1, 1}, SlotRef{i, 0});
    push(growth.eval(i), 0.0);
  }
  graph->add_cuff("f" + std::to_string(P), SlotRef{P - 1, 1});
  push(funnel_scale * growth.eval(P), 0.0);
  for (int i = 1; i <= P; ++i) {
    graph->add_cuff("b" + std::to_string(i), SlotRef{i - 1, 2});
    push(funnel_scale * growth.eval(i), 0.0);
  }
  graph->validate();
  MarkedSurface surface(std::move(graph), fn, fn);

  ShigaFamily fam;
  fam.growth = growth;
  std::vector<int> gamma_cuffs;
  for (int n = 1; n <= N; ++n)
    gamma_cuffs.push_back(surface.graph().cuff_index("a" + std::to_string(n)));
  for (int n = 0; n < N; ++n) fam.gammas.push_back(CurveWord::cuff(gamma_cuffs[n]));

  for (int n = 1; n <= N; ++n) {
    MulticurveLamination beta;
    for (int k = 1; k <= n; ++k)
      beta.weights[gamma_cuffs[k - 1]] = surface.length(gamma_cuffs[k - 1]);
    fam.betas.push_back(std::move(beta));
  }
  fam.beta_star = fam.betas.back();
  fam.surface = std::move(surface);
  return fam;
}

namespace {

int crossing_count(const PantsGraph& g, int cuff, const CurveWord& w) {
  if (w.is_cuff()) return 0;
  int n = 0;
  for (const PathSegment& s : w.segments())
    if (g.cuff_at(s.exit) == cuff) ++n;
  return n;
}

}  // namespace

LboundReport check_lbound(const ShigaFamily& fam, const CurveFamily& curves) {
  const PantsGraph& g = fam.surface.graph();
  LboundReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  FnCoordinates fn = fam.surface.effective_fn();
  for (int i = 0; i < curves.size(); ++i) {
    const CurveWord& delta = curves.words[i];
    double len = curve_length(g, fn, delta);
    double rhs = 0.0;
    for (size_t k = 0; k < fam.gammas.size(); ++k) {
      int cross = crossing_count(g, fam.gammas[k].cuff_index(), delta);
      if (cross)
        rhs += (k + 1.0) * fam.surface.length(fam.gammas[k].cuff_index()) * cross;
    }
    double margin = len - rhs;
    bool pass = margin >= -1e-9 * (1.0 + std::fabs(rhs));
    rep.rows.push_back(LboundRow{curves.ids[i], len, rhs, margin, pass});
    rep.pass = rep.pass && pass;
    rep.worst_margin = std::min(rep.worst_margin, margin);
  }
  return rep;
}

double find_shiga_growth(int N, int max_segments, double c_step, double c_max) {
  CurveFamily curves;
  bool have_curves = false;
  for (double c = c_step; c <= c_max + 1e-12; c += c_step) {
    ShigaFamily fam = make_shiga_family(N, LengthRule{LengthRule::Kind::Exp, c});
    if (!have_curves) {
      // the combinatorics do not depend on c; reuse the enumeration
      curves = enumerate_taut_words(fam.surface, max_segments);
      have_curves = true;
    }
    if (check_lbound(fam, curves).pass) return c;
  }
  fail(ErrorCode::Numeric, "no exp growth rate passes the lower-bound check at N=" +
                               std::to_string(N));
}

}  // namespace hypants
