#include <cmath>
#include <sstream>

#include "json.hpp"

#include "hypants/model.hpp"
#include "hypants/zoo.hpp"

namespace hypants {

namespace {

using nlohmann::json;

SlotRef parse_slot(const PantsGraph& g, const std::string& text) {
  auto dot = text.rfind('.');
  if (dot == std::string::npos)
    fail(ErrorCode::Parse, "malformed slot reference '" + text + "' (want node.slot)");
  std::string node = text.substr(0, dot);
  std::string slot = text.substr(dot + 1);
  if (slot.size() != 1 || slot[0] < '1' || slot[0] > '3')
    fail(ErrorCode::Parse, "slot index in '" + text + "' must be 1, 2 or 3");
  return SlotRef{g.pants_index(node), slot[0] - '1'};
}

std::string slot_text(const PantsGraph& g, SlotRef s) {
  return g.pants(s.pants).label + "." + std::to_string(s.slot + 1);
}

MarkedSurface from_document(const json& doc) {
  if (!doc.is_object()) fail(ErrorCode::Parse, "malformed document: expected an object");

  if (doc.contains("rule")) {
    if (doc.contains("pants") || doc.contains("cuffs"))
      fail(ErrorCode::Parse, "document has both a rule and explicit pants/cuffs");
    const json& r = doc["rule"];
    ZooRule rule;
    std::string kind = r.value("kind", "flute");
    if (kind == "flute")
      rule.kind = ZooKind::Flute;
    else if (kind == "ladder")
      rule.kind = ZooKind::Ladder;
    else
      fail(ErrorCode::Parse, "unknown rule kind '" + kind + "'");
    rule.N = r.value("N", 2);
    rule.cuff_rule = LengthRule::parse(r.value("cuff", "const:2"));
    rule.twist_rule = LengthRule::parse(r.value("twist", "const:0"));
    return make_zoo_surface(rule);
  }

  if (!doc.contains("pants") || !doc.contains("cuffs"))
    fail(ErrorCode::Parse, "malformed document: missing pants or cuffs");

  auto graph = std::make_shared<PantsGraph>();
  for (const auto& p : doc["pants"]) graph->add_pants(p.get<std::string>());

  FnCoordinates fn;
  std::vector<bool> is_free;
  for (const auto& c : doc["cuffs"]) {
    std::string id = c.at("id").get<std::string>();
    SlotRef a = parse_slot(*graph, c.at("end_a").get<std::string>());
    SlotRef b;
    bool free_boundary = false;
    std::string end_b = c.at("end_b").get<std::string>();
    if (end_b == "free")
      free_boundary = true;
    else
      b = parse_slot(*graph, end_b);
    graph->add_cuff(id, a, b);

    double length = c.at("length").get<double>();
    if (!(length > 0.0)) fail(ErrorCode::Parse, "nonpositive length on cuff " + id);
    double twist = 0.0;
    if (c.contains("twist")) {
      if (free_boundary) fail(ErrorCode::Parse, "free-boundary cuff " + id + " carries a twist");
      twist = c.at("twist").get<double>();
    }
    fn.by_cuff.push_back(FnEntry{length, twist});
    is_free.push_back(free_boundary);
  }
  graph->validate();

  FnCoordinates base = fn;
  if (doc.contains("base")) {
    for (const auto& [id, entry] : doc["base"].items()) {
      int idx = graph->cuff_index(id);
      if (entry.contains("length")) {
        double l = entry["length"].get<double>();
        if (!(l > 0.0)) fail(ErrorCode::Parse, "nonpositive length on base cuff " + id);
        base.by_cuff[idx].length = l;
      }
      if (entry.contains("twist")) {
        if (is_free[idx]) fail(ErrorCode::Parse, "free-boundary cuff " + id + " carries a twist");
        base.by_cuff[idx].twist = entry["twist"].get<double>();
      }
    }
  }
  return MarkedSurface(graph, fn, base);
}

}  // namespace

MarkedSurface parse_surface_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
  return from_document(doc);
}

std::string serialize_surface(const MarkedSurface& s) {
  const PantsGraph& g = s.graph();
  FnCoordinates fn = s.effective_fn();
  json doc;
  doc["pants"] = json::array();
  for (const PantsNode& p : g.pants_nodes()) doc["pants"].push_back(p.label);
  doc["cuffs"] = json::array();
  for (int i = 0; i < g.cuff_count(); ++i) {
    const Cuff& c = g.cuff(i);
    json jc;
    jc["id"] = c.label;
    jc["end_a"] = slot_text(g, c.end_a);
    jc["end_b"] = c.interior() ? slot_text(g, c.end_b) : "free";
    jc["length"] = fn.by_cuff[i].length;
    if (c.interior()) jc["twist"] = fn.by_cuff[i].twist;
    doc["cuffs"].push_back(jc);
  }
  if (!fn_equal(fn, s.base_fn())) {
    json base;
    for (int i = 0; i < g.cuff_count(); ++i) {
      json entry;
      entry["length"] = s.base_fn().by_cuff[i].length;
      if (g.cuff(i).interior()) entry["twist"] = s.base_fn().by_cuff[i].twist;
      base[g.cuff(i).label] = entry;
    }
    doc["base"] = base;
  }
  return doc.dump(2);
}

namespace {

struct CurveToken {
  int cuff = -1;
  int end = -1;  // -1 unconstrained, 0 end_a, 1 end_b
};

CurveToken parse_curve_token(const PantsGraph& g, const std::string& tok) {
  CurveToken t;
  std::string label = tok;
  if (tok.size() > 2 && tok[tok.size() - 2] == '.' &&
      (tok.back() == 'a' || tok.back() == 'b')) {
    t.end = tok.back() == 'a' ? 0 : 1;
    label = tok.substr(0, tok.size() - 2);
  }
  t.cuff = g.cuff_index(label);
  return t;
}

SlotRef token_slot(const PantsGraph& g, const CurveToken& t, int which) {
  const Cuff& c = g.cuff(t.cuff);
  return which == 0 ? c.end_a : c.end_b;
}

// Deterministic slot resolution: first cyclically consistent assignment with
// end_a tried before end_b.
bool resolve_segments(const PantsGraph& g, const std::vector<CurveToken>& enters,
                      const std::vector<CurveToken>& exits, const std::vector<int>& windings,
                      size_t i, std::vector<PathSegment>& out) {
  size_t m = enters.size();
  if (i == m) {
    return g.cuff(g.cuff_at(out[m - 1].exit)).interior() &&
           g.partner(out[m - 1].exit) == out[0].enter;
  }
  auto choices = [&](const CurveToken& t) {
    std::vector<int> which;
    const Cuff& c = g.cuff(t.cuff);
    for (int w = 0; w < (c.interior() ? 2 : 1); ++w)
      if (t.end < 0 || t.end == w) which.push_back(w);
    return which;
  };
  for (int we : choices(enters[i])) {
    SlotRef enter = token_slot(g, enters[i], we);
    if (i > 0) {
      if (!g.cuff(g.cuff_at(out[i - 1].exit)).interior()) continue;
      if (g.partner(out[i - 1].exit) != enter) continue;
    }
    for (int wx : choices(exits[i])) {
      SlotRef exit = token_slot(g, exits[i], wx);
      if (exit.pants != enter.pants) continue;
      out[i] = PathSegment{enter, exit, windings[i]};
      if (resolve_segments(g, enters, exits, windings, i + 1, out)) return true;
    }
  }
  return false;
}

}  // namespace

CurveWord parse_curve_word(const std::string& line, const PantsGraph& g) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  if (head == "cuff") {
    std::string label;
    in >> label;
    if (label.empty()) fail(ErrorCode::Parse, "cuff word missing label");
    std::string rest;
    if (in >> rest) fail(ErrorCode::Parse, "trailing tokens after cuff word");
    return CurveWord::cuff(g.cuff_index(label));
  }
  if (head != "path") fail(ErrorCode::Parse, "curve word must start with 'cuff' or 'path'");

  std::vector<CurveToken> enters, exits;
  std::vector<int> windings;
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::stringstream segs(rest);
  std::string segment;
  while (std::getline(segs, segment, '|')) {
    std::istringstream st(segment);
    std::string tok_enter, tok_exit, tok_wind;
    if (!(st >> tok_enter >> tok_exit >> tok_wind))
      fail(ErrorCode::Parse, "malformed path segment '" + segment + "'");
    std::string extra;
    if (st >> extra) fail(ErrorCode::Parse, "trailing tokens in path segment '" + segment + "'");
    enters.push_back(parse_curve_token(g, tok_enter));
    exits.push_back(parse_curve_token(g, tok_exit));
    try {
      size_t used = 0;
      int k = std::stoi(tok_wind, &used);
      if (used != tok_wind.size()) throw std::invalid_argument(tok_wind);
      windings.push_back(k);
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "malformed winding '" + tok_wind + "'");
    }
  }
  if (enters.empty()) fail(ErrorCode::Parse, "empty path word");

  std::vector<PathSegment> segments(enters.size());
  if (!resolve_segments(g, enters, exits, windings, 0, segments))
    fail(ErrorCode::Parse, "adjacency violation: path word does not close on the graph");
  CurveWord w = CurveWord::path(std::move(segments));
  w.validate(g);
  return w;
}

std::string serialize_curve_word(const CurveWord& w, const PantsGraph& g) {
  if (w.is_cuff()) return "cuff " + g.cuff(w.cuff_index()).label;
  std::string out = "path ";
  bool first = true;
  for (const PathSegment& s : w.segments()) {
    if (!first) out += " | ";
    first = false;
    auto tok = [&](SlotRef slot) {
      const Cuff& c = g.cuff(g.cuff_at(slot));
      return c.label + (c.end_a == slot ? ".a" : ".b");
    };
    out += tok(s.enter) + " " + tok(s.exit) + " " + (s.winding >= 0 ? "+" : "") +
           std::to_string(s.winding);
  }
  return out;
}

MulticurveLamination parse_lamination(const std::string& text, const PantsGraph& g) {
  MulticurveLamination mu;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string label;
    double w;
    if (!(ls >> label)) continue;
    if (!(ls >> w)) fail(ErrorCode::Parse, "lamination line missing weight: '" + line + "'");
    int idx = g.cuff_index(label);
    if (!(w >= 0.0)) fail(ErrorCode::Parse, "negative lamination weight on " + label);
    if (mu.weights.count(idx)) fail(ErrorCode::Parse, "duplicate lamination entry for " + label);
    if (w > 0.0) mu.weights[idx] = w;
  }
  mu.validate(g);
  return mu;
}

std::string serialize_lamination(const MulticurveLamination& mu, const PantsGraph& g) {
  std::string out;
  for (const auto& [cuff, w] : mu.weights) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    out += g.cuff(cuff).label + " " + buf + "\n";
  }
  return out;
}

}  // namespace hypants
