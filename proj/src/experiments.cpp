#include "hypants/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "hypants/holonomy.hpp"
#include "hypants/rng.hpp"

namespace hypants {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }
};

std::string yesno(bool b) { return b ? "1" : "0"; }

MarkedSurface default_flute(int N) {
  ZooRule rule;
  rule.kind = ZooKind::Flute;
  rule.N = N;
  rule.cuff_rule = LengthRule{LengthRule::Kind::Const, 2.0};
  rule.twist_rule = LengthRule{LengthRule::Kind::Const, 0.0};
  return make_zoo_surface(rule);
}

MulticurveLamination default_mu(const PantsGraph& g) {
  MulticurveLamination mu;
  mu.weights[g.cuff_index("a1")] = 1.0;
  mu.weights[g.cuff_index("a2")] = 0.5;
  mu.weights[g.cuff_index("a3")] = 2.0;
  return mu;
}

}  // namespace

std::string ExperimentReport::to_csv() const {
  std::string out;
  out += "# experiment=" + name + "\n";
  out += "# seed=" + std::to_string(seed) + "\n";
  for (const auto& [k, v] : params) out += "# " + k + "=" + v + "\n";
  out += "# verdict=" + std::string(pass ? "pass" : "fail") + "\n";
  out += "# worst_margin=" + format_double(worst_margin) + "\n";
  std::string head;
  for (const auto& h : header) {
    if (!head.empty()) head += ",";
    head += h;
  }
  out += head + "\n";
  for (const auto& row : rows) {
    std::string line;
    for (const auto& cell : row) {
      if (!line.empty()) line += ",";
      line += cell;
    }
    out += line + "\n";
  }
  return out;
}

ExperimentReport run_earthquake_limit(const MarkedSurface& s, const MulticurveLamination& mu,
                                      const CurveFamily& fam, const std::vector<double>& t_grid) {
  Timer timer;
  EarthquakePath path{s, mu, t_grid};
  path.validate();
  if (t_grid.empty() || !(t_grid.front() > 0.0))
    fail(ErrorCode::InvalidArgument, "earthquake-limit needs a positive t grid");

  ExperimentReport rep;
  rep.name = "earthquake-limit";
  rep.params.push_back({"family_size", std::to_string(fam.size())});
  rep.params.push_back({"mu", serialize_lamination(mu, s.graph())});
  // lamination serialization is multi-line; flatten for the header
  for (auto& [k, v] : rep.params)
    for (char& ch : v)
      if (ch == '\n') ch = ';';
  rep.header = {"t", "curve_id", "intersection", "base_length", "length", "deviation", "bound",
                "margin"};
  rep.pass = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  LengthSpectrumVector base = length_spectrum(s, fam);
  std::vector<double> inters(fam.size());
  for (int i = 0; i < fam.size(); ++i)
    inters[i] = intersection_number(s.graph(), mu, fam.words[i]);
  for (double t : t_grid) {
    MarkedSurface st = twist_earthquake(s, mu, t);
    FnCoordinates fn = st.effective_fn();
    for (int i = 0; i < fam.size(); ++i) {
      double inter = inters[i];
      double l0 = base.base[i];
      double lt = curve_length(s.graph(), fn, fam.words[i]);
      double deviation = std::fabs(lt / t - inter) / l0;
      double bound = 1.0 / t;
      double margin = l0 - std::fabs(lt - t * inter);  // = (bound - deviation) * t * l0
      rep.rows.push_back({format_double(t), fam.ids[i], format_double(inter), format_double(l0),
                          format_double(lt), format_double(deviation), format_double(bound),
                          format_double(margin)});
      rep.worst_margin = std::min(rep.worst_margin, margin);
      if (margin < -1e-9 * (1.0 + std::fabs(t * inter))) rep.pass = false;
    }
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

ExperimentReport run_metric_comparison(const MarkedSurface& s, const CurveFamily& fam,
                                       int n_samples, double perturbation, std::uint64_t seed) {
  Timer timer;
  if (!(perturbation > 0.0) || perturbation > 0.5)
    fail(ErrorCode::InvalidArgument, "perturbation must lie in (0, 0.5]");

  ExperimentReport rep;
  rep.name = "metric-compare";
  rep.seed = seed;
  rep.params.push_back({"samples", std::to_string(n_samples)});
  rep.params.push_back({"perturbation", format_double(perturbation)});
  rep.params.push_back({"family_size", std::to_string(fam.size())});
  rep.header = {"sample", "dls", "sup_distance", "ratio", "M", "bracket_lo", "bracket_hi",
                "degenerate", "ok"};
  rep.pass = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  LengthSpectrumVector u = length_spectrum(s, fam);  // identity marking: values == base
  Rng rng(seed);
  const PantsGraph& g = s.graph();
  for (int sample = 0; sample < n_samples; ++sample) {
    FnCoordinates fn = s.effective_fn();
    for (int c = 0; c < g.cuff_count(); ++c) {
      if (!g.cuff(c).interior()) continue;
      fn.by_cuff[c].length *= std::exp(rng.uniform(-perturbation, perturbation));
      fn.by_cuff[c].twist += rng.uniform(-perturbation, perturbation);
    }
    MarkedSurface deformed = s.with_fn(fn);
    LengthSpectrumVector v = length_spectrum(deformed, fam);

    double dls = dls_distance(u, v);
    double sup = normalized_sup_distance(u, v);
    bool degenerate = !(dls > 0.0) || !(sup > 0.0);
    double M = 1.0;
    for (size_t i = 0; i < v.values.size(); ++i) {
      M = std::max(M, v.values[i] / v.base[i]);
      M = std::max(M, v.base[i] / v.values[i]);
    }
    double lo = 1.0 / (2.0 * M), hi = 2.0 * M;
    double ratio = degenerate ? 0.0 : dls / sup;
    bool ok = degenerate || (dls > 0.5) || (ratio >= lo && ratio <= hi);
    if (!degenerate && dls <= 0.5) {
      rep.worst_margin = std::min(rep.worst_margin, std::min(ratio - lo, hi - ratio));
      if (!ok) rep.pass = false;
    }
    rep.rows.push_back({std::to_string(sample), format_double(dls), format_double(sup),
                        format_double(ratio), format_double(M), format_double(lo),
                        format_double(hi), yesno(degenerate), yesno(ok)});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

ExperimentReport run_bounded_norm_check(const ZooRule& rule, int n_betas, double norm_bound,
                                        std::uint64_t seed) {
  Timer timer;
  if (rule.cuff_rule.kind != LengthRule::Kind::Const)
    fail(ErrorCode::InvalidArgument,
         "unbounded rule rejected: bounded-norm check needs a const cuff rule");
  MarkedSurface s = make_zoo_surface(rule);
  const PantsGraph& g = s.graph();
  double M = std::max(rule.cuff_rule.param, 1.0 / rule.cuff_rule.param);

  std::vector<int> interior;
  for (int c = 0; c < g.cuff_count(); ++c)
    if (g.cuff(c).interior()) interior.push_back(c);

  std::vector<CurveWord> words;
  for (int c = 0; c < g.cuff_count(); ++c) words.push_back(CurveWord::cuff(c));
  int first_star = static_cast<int>(words.size());
  for (int c : interior) words.push_back(star_curve(s, c));
  CurveFamily fam = make_family(g, std::move(words));
  LengthSpectrumVector base = length_spectrum(s, fam);

  double sup_star_len = 0.0;
  for (int i = first_star; i < fam.size(); ++i)
    sup_star_len = std::max(sup_star_len, base.base[i]);

  ExperimentReport rep;
  rep.name = "bounded-norm";
  rep.seed = seed;
  rep.params.push_back({"M", format_double(M)});
  rep.params.push_back({"norm_bound", format_double(norm_bound)});
  rep.params.push_back({"sup_star_length", format_double(sup_star_len)});
  rep.header = {"beta", "ls_norm", "sup_i_cuff", "sup_i_star", "bound", "ok"};
  rep.pass = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  double inferred_c = 0.0;
  Rng rng(seed);
  for (int b = 0; b < n_betas; ++b) {
    MulticurveLamination beta;
    int support = 1 + static_cast<int>(rng.next_u64() % 5);
    for (int k = 0; k < support; ++k) {
      int cuff = interior[static_cast<size_t>(rng.next_u64() % interior.size())];
      beta.weights[cuff] = rng.uniform(0.1, 2.0);
    }
    double norm = ls_norm(g, beta, fam, base);
    for (auto& [c, w] : beta.weights) w *= norm_bound / norm;

    double sup_cuff = 0.0, sup_star = 0.0;
    for (int i = 0; i < fam.size(); ++i) {
      double inter = intersection_number(g, beta, fam.words[i]);
      if (i < first_star)
        sup_cuff = std::max(sup_cuff, inter);
      else
        sup_star = std::max(sup_star, inter);
    }
    double bound = norm_bound * std::max(M, sup_star_len);
    bool ok = std::isfinite(sup_star) && sup_star <= bound * (1.0 + 1e-9);
    inferred_c = std::max(inferred_c, sup_star);
    rep.worst_margin = std::min(rep.worst_margin, bound - sup_star);
    if (!ok) rep.pass = false;
    rep.rows.push_back({std::to_string(b), format_double(norm_bound), format_double(sup_cuff),
                        format_double(sup_star), format_double(bound), yesno(ok)});
  }
  rep.params.push_back({"inferred_C", format_double(inferred_c)});
  rep.runtime_ms = timer.ms();
  return rep;
}

ExperimentReport run_shiga_boundary(int N, const LengthRule& growth, int max_segments) {
  Timer timer;
  ShigaFamily fam = make_shiga_family(N, growth);
  CurveFamily curves = enumerate_taut_words(fam.surface, max_segments);
  LboundReport lbound = check_lbound(fam, curves);
  if (!lbound.pass) {
    std::string worst;
    double wm = 0.0;
    for (const auto& r : lbound.rows)
      if (!r.pass && r.margin < wm) {
        wm = r.margin;
        worst = r.id;
      }
    fail(ErrorCode::Domain, "growth " + growth.to_string() +
                                " fails the length lower bound; worst curve: " + worst +
                                " (margin " + format_double(wm) + ")");
  }

  const PantsGraph& g = fam.surface.graph();
  FnCoordinates fn = fam.surface.effective_fn();

  ExperimentReport rep;
  rep.name = "shiga";
  rep.params.push_back({"N", std::to_string(N)});
  rep.params.push_back({"growth", growth.to_string()});
  rep.params.push_back({"family_size", std::to_string(curves.size())});
  rep.params.push_back({"lbound_worst_margin", format_double(lbound.worst_margin)});
  rep.header = {"n", "sup_ratio", "bound", "margin", "ok"};
  rep.pass = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  std::vector<double> lengths(curves.size());
  for (int i = 0; i < curves.size(); ++i) lengths[i] = curve_length(g, fn, curves.words[i]);

  for (int n = 1; n <= N; ++n) {
    const MulticurveLamination& beta_n = fam.betas[n - 1];
    double sup_ratio = 0.0;
    for (int i = 0; i < curves.size(); ++i) {
      double diff = std::fabs(intersection_number(g, beta_n, curves.words[i]) -
                              intersection_number(g, fam.beta_star, curves.words[i]));
      sup_ratio = std::max(sup_ratio, diff / lengths[i]);
    }
    double bound = 1.0 / (n + 1.0);
    double margin = bound - sup_ratio;
    bool ok = margin >= -1e-12;
    if (!ok) rep.pass = false;
    rep.worst_margin = std::min(rep.worst_margin, margin);
    rep.rows.push_back({std::to_string(n), format_double(sup_ratio), format_double(bound),
                        format_double(margin), yesno(ok)});
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt) {
  std::vector<double> grid = opt.t_grid.empty() ? std::vector<double>{1, 10, 100, 1000}
                                                : opt.t_grid;
  if (name == "earthquake-limit") {
    int N = opt.N > 0 ? opt.N : 20;
    int max_segments = opt.max_segments > 0 ? opt.max_segments : 4;
    MarkedSurface s = default_flute(N);
    CurveFamily fam = enumerate_taut_words(s, max_segments);
    ExperimentReport rep = run_earthquake_limit(s, default_mu(s.graph()), fam, grid);
    rep.seed = opt.seed;
    rep.params.push_back({"N", std::to_string(N)});
    rep.params.push_back({"max_segments", std::to_string(max_segments)});
    return rep;
  }
  if (name == "metric-compare") {
    int N = opt.N > 0 ? opt.N : 20;
    int max_segments = opt.max_segments > 0 ? opt.max_segments : 2;
    MarkedSurface s = default_flute(N);
    CurveFamily fam = enumerate_taut_words(s, max_segments);
    ExperimentReport rep = run_metric_comparison(s, fam, 100, 0.1, opt.seed);
    rep.params.push_back({"N", std::to_string(N)});
    rep.params.push_back({"max_segments", std::to_string(max_segments)});
    return rep;
  }
  if (name == "bounded-norm") {
    ZooRule rule;
    rule.kind = ZooKind::Flute;
    rule.N = opt.N > 0 ? opt.N : 20;
    rule.cuff_rule = LengthRule{LengthRule::Kind::Const, 2.0};
    return run_bounded_norm_check(rule, 50, 1.0, opt.seed);
  }
  if (name == "shiga") {
    int N = opt.N > 0 ? opt.N : 10;
    int max_segments = opt.max_segments > 0 ? opt.max_segments : 4;
    LengthRule growth;
    if (opt.growth.empty()) {
      double c = find_shiga_growth(N, max_segments);
      growth = LengthRule{LengthRule::Kind::Exp, c};
    } else {
      growth = LengthRule::parse(opt.growth);
    }
    ExperimentReport rep = run_shiga_boundary(N, growth, max_segments);
    rep.seed = opt.seed;
    rep.params.push_back({"max_segments", std::to_string(max_segments)});
    return rep;
  }
  fail(ErrorCode::InvalidArgument,
       "unknown experiment '" + name +
           "' (expected earthquake-limit, metric-compare, bounded-norm or shiga)");
}

}  // namespace hypants
