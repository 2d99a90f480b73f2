#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hypants/error.hpp"

namespace hypants {

// A pants node has three boundary slots. A cuff edge either joins two slots
// (possibly of the same pants node, the handle case) or marks a slot as a free
// boundary of the truncation.

struct SlotRef {
  int pants = -1;
  int slot = -1;  // 0..2

  bool valid() const { return pants >= 0 && slot >= 0; }
  friend bool operator==(const SlotRef& a, const SlotRef& b) {
    return a.pants == b.pants && a.slot == b.slot;
  }
  friend bool operator!=(const SlotRef& a, const SlotRef& b) { return !(a == b); }
  friend bool operator<(const SlotRef& a, const SlotRef& b) {
    return a.pants != b.pants ? a.pants < b.pants : a.slot < b.slot;
  }
};

struct Cuff {
  std::string label;
  SlotRef end_a;
  SlotRef end_b;  // invalid when free boundary
  bool interior() const { return end_b.valid(); }
};

struct PantsNode {
  std::string label;
  std::array<int, 3> cuff_at_slot{-1, -1, -1};
};

class PantsGraph {
 public:
  PantsGraph() = default;

  int add_pants(const std::string& label);
  // end_b invalid -> free boundary cuff
  int add_cuff(const std::string& label, SlotRef end_a, SlotRef end_b = SlotRef{});

  // Throws unless every slot is covered exactly once and the graph is connected.
  void validate() const;

  int pants_count() const { return static_cast<int>(pants_.size()); }
  int cuff_count() const { return static_cast<int>(cuffs_.size()); }
  const PantsNode& pants(int i) const { return pants_.at(i); }
  const Cuff& cuff(int i) const { return cuffs_.at(i); }
  const std::vector<Cuff>& cuffs() const { return cuffs_; }
  const std::vector<PantsNode>& pants_nodes() const { return pants_; }

  int cuff_index(const std::string& label) const;      // throws on unknown label
  int pants_index(const std::string& label) const;     // throws on unknown label
  int find_cuff(const std::string& label) const;       // -1 on unknown
  int find_pants(const std::string& label) const;      // -1 on unknown

  int cuff_at(SlotRef s) const;
  // The slot on the far side of the cuff at `s`. Throws for free boundaries.
  SlotRef partner(SlotRef s) const;
  bool is_free_slot(SlotRef s) const;

  int interior_cuff_count() const;

 private:
  std::vector<PantsNode> pants_;
  std::vector<Cuff> cuffs_;
  std::map<std::string, int> pants_by_label_;
  std::map<std::string, int> cuffs_by_label_;
};

struct FnEntry {
  double length = 0.0;  // > 0
  double twist = 0.0;   // ignored for free-boundary cuffs
};

// Per-cuff Fenchel-Nielsen assignment, indexed like PantsGraph::cuff.
struct FnCoordinates {
  std::vector<FnEntry> by_cuff;

  double length(int cuff) const { return by_cuff.at(cuff).length; }
  double twist(int cuff) const { return by_cuff.at(cuff).twist; }
  void validate(const PantsGraph& g) const;
};

// Finitely supported weight map cuff -> w >= 0.
struct MulticurveLamination {
  std::map<int, double> weights;  // cuff index -> weight, nonzero entries only

  double weight(int cuff) const {
    auto it = weights.find(cuff);
    return it == weights.end() ? 0.0 : it->second;
  }
  bool empty() const { return weights.empty(); }
  void validate(const PantsGraph& g) const;
  friend bool operator==(const MulticurveLamination& a, const MulticurveLamination& b) {
    return a.weights == b.weights;
  }
};

// One transversal arc of a curve through a pants node: enters through `enter`,
// leaves through `exit` (same node; enter == exit is the essential wrapping
// arc). `winding` counts signed full loops around the exit cuff taken at the
// crossing: it selects the lift of the gluing, so +-1 is a full Dehn twist.
struct PathSegment {
  SlotRef enter;
  SlotRef exit;
  int winding = 0;

  friend bool operator==(const PathSegment& a, const PathSegment& b) {
    return a.enter == b.enter && a.exit == b.exit && a.winding == b.winding;
  }
};

class CurveWord {
 public:
  static CurveWord cuff(int cuff_index);
  static CurveWord path(std::vector<PathSegment> segments);

  bool is_cuff() const { return std::holds_alternative<int>(repr_); }
  int cuff_index() const { return std::get<int>(repr_); }
  const std::vector<PathSegment>& segments() const {
    return std::get<std::vector<PathSegment>>(repr_);
  }

  // Adjacency + the named backtrack check. Throws on violation.
  void validate(const PantsGraph& g) const;

  CurveWord rotated(int by) const;
  CurveWord reversed() const;
  // Minimal encoding over all rotations and the reversal; used for dedup.
  std::vector<long long> canonical_key() const;

  friend bool operator==(const CurveWord& a, const CurveWord& b) { return a.repr_ == b.repr_; }

 private:
  std::variant<int, std::vector<PathSegment>> repr_;
};

struct PendingTwist {
  MulticurveLamination mu;
  double t = 0.0;
};

// A marked surface: combinatorics plus current and base FN coordinates. The
// optional pending twist keeps earthquake flows additive to the bit: the
// effective twist is always computed as tau + t*w from the same stored pair.
class MarkedSurface {
 public:
  MarkedSurface() = default;
  MarkedSurface(std::shared_ptr<const PantsGraph> graph, FnCoordinates fn, FnCoordinates base_fn);

  const PantsGraph& graph() const { return *graph_; }
  std::shared_ptr<const PantsGraph> graph_ptr() const { return graph_; }
  const FnCoordinates& base_fn() const { return base_fn_; }
  const FnCoordinates& stored_fn() const { return fn_; }
  const std::optional<PendingTwist>& pending() const { return pending_; }

  double length(int cuff) const { return fn_.by_cuff[cuff].length; }
  double twist(int cuff) const;
  FnCoordinates effective_fn() const;

  MarkedSurface with_pending(MulticurveLamination mu, double t) const;
  MarkedSurface materialized() const;
  MarkedSurface with_fn(FnCoordinates fn) const;

 private:
  std::shared_ptr<const PantsGraph> graph_;
  FnCoordinates fn_;
  FnCoordinates base_fn_;
  std::optional<PendingTwist> pending_;
};

struct CurveSupport {
  std::set<int> pants;
  std::set<int> cuffs;  // crossed or coincided with
};

CurveSupport support_of(const PantsGraph& g, const CurveWord& w);

// True when modifying the FN data of `cuff` can affect a curve with this
// support: the cuff is crossed/coincided or bounds a traversed pants node.
bool support_touches(const PantsGraph& g, const CurveSupport& s, int cuff);

// --- documents ---------------------------------------------------------------

MarkedSurface parse_surface_spec(const std::string& text);
std::string serialize_surface(const MarkedSurface& s);

CurveWord parse_curve_word(const std::string& line, const PantsGraph& g);
std::string serialize_curve_word(const CurveWord& w, const PantsGraph& g);

MulticurveLamination parse_lamination(const std::string& text, const PantsGraph& g);
std::string serialize_lamination(const MulticurveLamination& mu, const PantsGraph& g);

bool fn_equal(const FnCoordinates& a, const FnCoordinates& b);

}  // namespace hypants
