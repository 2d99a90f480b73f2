#include "hypants/model.hpp"

#include <algorithm>
#include <cmath>

namespace hypants {

int PantsGraph::add_pants(const std::string& label) {
  if (pants_by_label_.count(label)) fail(ErrorCode::Parse, "duplicate pants label: " + label);
  pants_.push_back(PantsNode{label, {-1, -1, -1}});
  int idx = static_cast<int>(pants_.size()) - 1;
  pants_by_label_[label] = idx;
  return idx;
}

int PantsGraph::add_cuff(const std::string& label, SlotRef end_a, SlotRef end_b) {
  if (cuffs_by_label_.count(label)) fail(ErrorCode::Parse, "duplicate cuff label: " + label);
  auto attach = [&](SlotRef s, int cuff_idx) {
    if (s.pants < 0 || s.pants >= pants_count() || s.slot < 0 || s.slot > 2)
      fail(ErrorCode::Parse, "cuff " + label + " references unknown slot");
    int& cell = pants_[s.pants].cuff_at_slot[s.slot];
    if (cell != -1)
      fail(ErrorCode::Parse, "slot " + pants_[s.pants].label + "." + std::to_string(s.slot + 1) +
                                 " bound to two cuffs");
    cell = cuff_idx;
  };
  int idx = static_cast<int>(cuffs_.size());
  cuffs_.push_back(Cuff{label, end_a, end_b});
  cuffs_by_label_[label] = idx;
  attach(end_a, idx);
  if (end_b.valid()) {
    if (end_b == end_a) fail(ErrorCode::Parse, "cuff " + label + " joins a slot to itself");
    attach(end_b, idx);
  }
  return idx;
}

void PantsGraph::validate() const {
  if (pants_.empty()) fail(ErrorCode::Parse, "surface has no pants");
  for (int p = 0; p < pants_count(); ++p)
    for (int s = 0; s < 3; ++s)
      if (pants_[p].cuff_at_slot[s] == -1)
        fail(ErrorCode::Parse,
             "dangling slot " + pants_[p].label + "." + std::to_string(s + 1));
  // connectivity over interior cuffs
  std::vector<int> seen(pants_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      const Cuff& c = cuffs_[pants_[p].cuff_at_slot[s]];
      if (!c.interior()) continue;
      for (SlotRef e : {c.end_a, c.end_b}) {
        if (!seen[e.pants]) {
          seen[e.pants] = 1;
          stack.push_back(e.pants);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    fail(ErrorCode::Parse, "pants graph is not connected");
}

int PantsGraph::cuff_index(const std::string& label) const {
  auto it = cuffs_by_label_.find(label);
  if (it == cuffs_by_label_.end()) fail(ErrorCode::Parse, "unknown cuff label: " + label);
  return it->second;
}

int PantsGraph::pants_index(const std::string& label) const {
  auto it = pants_by_label_.find(label);
  if (it == pants_by_label_.end()) fail(ErrorCode::Parse, "unknown pants label: " + label);
  return it->second;
}

int PantsGraph::find_cuff(const std::string& label) const {
  auto it = cuffs_by_label_.find(label);
  return it == cuffs_by_label_.end() ? -1 : it->second;
}

int PantsGraph::find_pants(const std::string& label) const {
  auto it = pants_by_label_.find(label);
  return it == pants_by_label_.end() ? -1 : it->second;
}

int PantsGraph::cuff_at(SlotRef s) const { return pants_.at(s.pants).cuff_at_slot.at(s.slot); }

SlotRef PantsGraph::partner(SlotRef s) const {
  const Cuff& c = cuffs_.at(cuff_at(s));
  if (!c.interior())
    fail(ErrorCode::Domain, "cuff " + c.label + " is a free boundary; no far side");
  return (c.end_a == s) ? c.end_b : c.end_a;
}

bool PantsGraph::is_free_slot(SlotRef s) const { return !cuffs_.at(cuff_at(s)).interior(); }

int PantsGraph::interior_cuff_count() const {
  int n = 0;
  for (const Cuff& c : cuffs_)
    if (c.interior()) ++n;
  return n;
}

void FnCoordinates::validate(const PantsGraph& g) const {
  if (static_cast<int>(by_cuff.size()) != g.cuff_count())
    fail(ErrorCode::InvalidArgument, "FN coordinates do not cover every cuff");
  for (int i = 0; i < g.cuff_count(); ++i) {
    double l = by_cuff[i].length;
    if (!(l > 0.0) || !std::isfinite(l))
      fail(ErrorCode::Domain, "nonpositive length on cuff " + g.cuff(i).label);
    if (!std::isfinite(by_cuff[i].twist))
      fail(ErrorCode::Domain, "non-finite twist on cuff " + g.cuff(i).label);
  }
}

void MulticurveLamination::validate(const PantsGraph& g) const {
  for (const auto& [cuff, w] : weights) {
    if (cuff < 0 || cuff >= g.cuff_count())
      fail(ErrorCode::InvalidArgument, "lamination supported on unknown cuff");
    if (!(w >= 0.0) || !std::isfinite(w))
      fail(ErrorCode::Domain, "negative lamination weight on cuff " + g.cuff(cuff).label);
  }
}

CurveWord CurveWord::cuff(int cuff_index) {
  CurveWord w;
  w.repr_ = cuff_index;
  return w;
}

CurveWord CurveWord::path(std::vector<PathSegment> segments) {
  CurveWord w;
  w.repr_ = std::move(segments);
  return w;
}

void CurveWord::validate(const PantsGraph& g) const {
  if (is_cuff()) {
    if (cuff_index() < 0 || cuff_index() >= g.cuff_count())
      fail(ErrorCode::Parse, "unknown cuff index in curve word");
    return;
  }
  const auto& segs = segments();
  if (segs.empty()) fail(ErrorCode::Parse, "empty curve word");
  int m = static_cast<int>(segs.size());
  for (int i = 0; i < m; ++i) {
    const PathSegment& s = segs[i];
    if (s.enter.pants != s.exit.pants)
      fail(ErrorCode::Parse, "segment enters and exits different pants nodes");
    if (g.is_free_slot(s.exit))
      fail(ErrorCode::Domain,
           "curve exits truncation through free boundary " + g.cuff(g.cuff_at(s.exit)).label);
    const PathSegment& nxt = segs[(i + 1) % m];
    if (g.partner(s.exit) != nxt.enter)
      fail(ErrorCode::Parse, "adjacency violation between consecutive segments");
  }
  // The only backtrack pattern expressible here: a two-segment word poking
  // through one cuff and straight back along the same seam with no winding.
  if (m == 2 && segs[0].winding == 0 && segs[1].winding == 0 &&
      segs[0].enter == segs[1].exit && segs[0].exit != segs[0].enter &&
      segs[1].enter != segs[1].exit && g.partner(segs[0].exit) == segs[1].enter &&
      segs[1].enter.pants == segs[0].exit.pants && segs[0].enter.pants == segs[1].enter.pants &&
      segs[1].exit == segs[0].enter && segs[1].enter == segs[0].exit)
    fail(ErrorCode::Parse, "non-taut word: immediate backtrack");
}

CurveWord CurveWord::rotated(int by) const {
  if (is_cuff()) return *this;
  const auto& segs = segments();
  int m = static_cast<int>(segs.size());
  std::vector<PathSegment> out(m);
  for (int i = 0; i < m; ++i) out[i] = segs[(i + by) % m];
  return path(std::move(out));
}

CurveWord CurveWord::reversed() const {
  if (is_cuff()) return *this;
  const auto& segs = segments();
  int m = static_cast<int>(segs.size());
  std::vector<PathSegment> out;
  out.reserve(m);
  // Crossings come in reverse order. Each crossing keeps its gluing lift
  // (tau + k*L is symmetric in the two sides), so the winding of crossing i
  // reattaches to the reversed segment that exits through that cuff.
  for (int i = m - 1; i >= 0; --i) {
    int prev = (i - 1 + m) % m;
    out.push_back(PathSegment{segs[i].exit, segs[i].enter, segs[prev].winding});
  }
  return path(std::move(out));
}

std::vector<long long> CurveWord::canonical_key() const {
  if (is_cuff()) return {-1, cuff_index()};
  auto encode = [](const CurveWord& w) {
    std::vector<long long> v;
    for (const PathSegment& s : w.segments()) {
      v.push_back(s.enter.pants * 3 + s.enter.slot);
      v.push_back(s.exit.pants * 3 + s.exit.slot);
      v.push_back(s.winding);
    }
    return v;
  };
  int m = static_cast<int>(segments().size());
  std::vector<long long> best;
  const CurveWord rev = reversed();
  for (int r = 0; r < m; ++r) {
    for (const CurveWord* base : {this, &rev}) {
      auto v = encode(base->rotated(r));
      if (best.empty() || v < best) best = std::move(v);
    }
  }
  return best;
}

MarkedSurface::MarkedSurface(std::shared_ptr<const PantsGraph> graph, FnCoordinates fn,
                             FnCoordinates base_fn)
    : graph_(std::move(graph)), fn_(std::move(fn)), base_fn_(std::move(base_fn)) {
  fn_.validate(*graph_);
  base_fn_.validate(*graph_);
}

double MarkedSurface::twist(int cuff) const {
  double tau = fn_.by_cuff[cuff].twist;
  if (pending_) tau += pending_->t * pending_->mu.weight(cuff);
  return tau;
}

FnCoordinates MarkedSurface::effective_fn() const {
  FnCoordinates out = fn_;
  if (pending_)
    for (const auto& [cuff, w] : pending_->mu.weights) out.by_cuff[cuff].twist += pending_->t * w;
  return out;
}

MarkedSurface MarkedSurface::with_pending(MulticurveLamination mu, double t) const {
  MarkedSurface out = *this;
  if (pending_ && pending_->mu == mu) {
    out.pending_->t = pending_->t + t;
    return out;
  }
  if (pending_) {
    out.fn_ = effective_fn();
  }
  out.pending_ = PendingTwist{std::move(mu), t};
  return out;
}

MarkedSurface MarkedSurface::materialized() const {
  MarkedSurface out = *this;
  out.fn_ = effective_fn();
  out.pending_.reset();
  return out;
}

MarkedSurface MarkedSurface::with_fn(FnCoordinates fn) const {
  MarkedSurface out = *this;
  fn.validate(*graph_);
  out.fn_ = std::move(fn);
  out.pending_.reset();
  return out;
}

CurveSupport support_of(const PantsGraph& g, const CurveWord& w) {
  CurveSupport sup;
  if (w.is_cuff()) {
    int c = w.cuff_index();
    sup.cuffs.insert(c);
    sup.pants.insert(g.cuff(c).end_a.pants);
    if (g.cuff(c).interior()) sup.pants.insert(g.cuff(c).end_b.pants);
    return sup;
  }
  for (const PathSegment& s : w.segments()) {
    sup.pants.insert(s.enter.pants);
    sup.cuffs.insert(g.cuff_at(s.enter));
    sup.cuffs.insert(g.cuff_at(s.exit));
  }
  return sup;
}

bool support_touches(const PantsGraph& g, const CurveSupport& s, int cuff) {
  if (s.cuffs.count(cuff)) return true;
  const Cuff& c = g.cuff(cuff);
  if (s.pants.count(c.end_a.pants)) return true;
  if (c.interior() && s.pants.count(c.end_b.pants)) return true;
  return false;
}

bool fn_equal(const FnCoordinates& a, const FnCoordinates& b) {
  if (a.by_cuff.size() != b.by_cuff.size()) return false;
  for (size_t i = 0; i < a.by_cuff.size(); ++i)
    if (a.by_cuff[i].length != b.by_cuff[i].length || a.by_cuff[i].twist != b.by_cuff[i].twist)
      return false;
  return true;
}

}  // namespace hypants
