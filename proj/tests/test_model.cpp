#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "hypants/model.hpp"
#include "hypants/zoo.hpp"

using namespace hypants;

namespace {

const char* kOnePants = R"({
  "pants": ["P1"],
  "cuffs": [
    {"id": "c1", "end_a": "P1.1", "end_b": "free", "length": 1.0},
    {"id": "c2", "end_a": "P1.2", "end_b": "free", "length": 1.0},
    {"id": "c3", "end_a": "P1.3", "end_b": "free", "length": 1.0}
  ]
})";

const char* kTwoPants = R"({
  "pants": ["p", "q"],
  "cuffs": [
    {"id": "a1", "end_a": "p.1", "end_b": "q.1", "length": 2.0, "twist": 0.0},
    {"id": "a2", "end_a": "p.2", "end_b": "q.2", "length": 2.0, "twist": 0.0},
    {"id": "a3", "end_a": "p.3", "end_b": "q.3", "length": 2.0, "twist": 0.0}
  ]
})";

}  // namespace

TEST_CASE("smallest surface: one pants, three free boundaries") {
  MarkedSurface s = parse_surface_spec(kOnePants);
  CHECK(s.graph().pants_count() == 1);
  CHECK(s.graph().cuff_count() == 3);
  CHECK(s.graph().interior_cuff_count() == 0);
}

TEST_CASE("two pants glued along all three cuffs") {
  MarkedSurface s = parse_surface_spec(kTwoPants);
  CHECK(s.graph().pants_count() == 2);
  CHECK(s.graph().interior_cuff_count() == 3);
  CHECK(s.length(s.graph().cuff_index("a2")) == 2.0);
}

TEST_CASE("parse errors") {
  SUBCASE("nonpositive length") {
    std::string doc = kOnePants;
    auto pos = doc.find("1.0");
    doc.replace(pos, 3, "-1.0");
    CHECK_THROWS_WITH_AS(parse_surface_spec(doc), doctest::Contains("nonpositive length"), Error);
  }
  SUBCASE("dangling slot") {
    const char* doc = R"({
      "pants": ["P1"],
      "cuffs": [
        {"id": "c1", "end_a": "P1.1", "end_b": "free", "length": 1.0},
        {"id": "c2", "end_a": "P1.2", "end_b": "free", "length": 1.0}
      ]
    })";
    CHECK_THROWS_WITH_AS(parse_surface_spec(doc), doctest::Contains("dangling slot"), Error);
  }
  SUBCASE("malformed document") {
    CHECK_THROWS_AS(parse_surface_spec("{not json"), Error);
    CHECK_THROWS_WITH_AS(parse_surface_spec("{}"), doctest::Contains("malformed"), Error);
  }
  SUBCASE("slot bound twice") {
    const char* doc = R"({
      "pants": ["P1", "P2"],
      "cuffs": [
        {"id": "c1", "end_a": "P1.1", "end_b": "P1.1", "length": 1.0}
      ]
    })";
    CHECK_THROWS_AS(parse_surface_spec(doc), Error);
  }
  SUBCASE("twist on a free boundary") {
    const char* doc = R"({
      "pants": ["P1"],
      "cuffs": [
        {"id": "c1", "end_a": "P1.1", "end_b": "free", "length": 1.0, "twist": 0.5},
        {"id": "c2", "end_a": "P1.2", "end_b": "free", "length": 1.0},
        {"id": "c3", "end_a": "P1.3", "end_b": "free", "length": 1.0}
      ]
    })";
    CHECK_THROWS_AS(parse_surface_spec(doc), Error);
  }
  SUBCASE("disconnected graph") {
    const char* doc = R"({
      "pants": ["P1", "P2"],
      "cuffs": [
        {"id": "c1", "end_a": "P1.1", "end_b": "free", "length": 1.0},
        {"id": "c2", "end_a": "P1.2", "end_b": "free", "length": 1.0},
        {"id": "c3", "end_a": "P1.3", "end_b": "free", "length": 1.0},
        {"id": "d1", "end_a": "P2.1", "end_b": "free", "length": 1.0},
        {"id": "d2", "end_a": "P2.2", "end_b": "free", "length": 1.0},
        {"id": "d3", "end_a": "P2.3", "end_b": "free", "length": 1.0}
      ]
    })";
    CHECK_THROWS_WITH_AS(parse_surface_spec(doc), doctest::Contains("not connected"), Error);
  }
}

TEST_CASE("surface document round-trip") {
  for (const char* doc : {kOnePants, kTwoPants}) {
    MarkedSurface s1 = parse_surface_spec(doc);
    std::string text1 = serialize_surface(s1);
    MarkedSurface s2 = parse_surface_spec(text1);
    CHECK(serialize_surface(s2) == text1);
    CHECK(fn_equal(s1.effective_fn(), s2.effective_fn()));
    CHECK(fn_equal(s1.base_fn(), s2.base_fn()));
  }
}

TEST_CASE("base override survives the round-trip") {
  std::string doc = kTwoPants;
  doc.insert(doc.rfind('}'), R"(, "base": {"a1": {"length": 1.5, "twist": 0.25}})");
  MarkedSurface s = parse_surface_spec(doc);
  int a1 = s.graph().cuff_index("a1");
  CHECK(s.base_fn().length(a1) == 1.5);
  CHECK(s.base_fn().twist(a1) == 0.25);
  CHECK(s.length(a1) == 2.0);
  MarkedSurface s2 = parse_surface_spec(serialize_surface(s));
  CHECK(fn_equal(s.base_fn(), s2.base_fn()));
}

TEST_CASE("rule-based documents expand through the zoo") {
  const char* doc = R"({"rule": {"kind": "flute", "N": 20, "cuff": "const:2", "twist": "const:0"}})";
  MarkedSurface s = parse_surface_spec(doc);
  CHECK(s.graph().pants_count() == 20);
  CHECK(s.graph().interior_cuff_count() == 19);

  const char* both = R"({"pants": ["P1"], "cuffs": [], "rule": {"kind": "flute", "N": 3}})";
  CHECK_THROWS_AS(parse_surface_spec(both), Error);

  const char* bad = R"({"rule": {"kind": "moebius", "N": 3}})";
  CHECK_THROWS_WITH_AS(parse_surface_spec(bad), doctest::Contains("unknown rule"), Error);
}

TEST_CASE("curve word parsing") {
  MarkedSurface s = parse_surface_spec(kTwoPants);
  const PantsGraph& g = s.graph();

  SUBCASE("cuff word") {
    CurveWord w = parse_curve_word("cuff a3", g);
    CHECK(w.is_cuff());
    CHECK(w.cuff_index() == g.cuff_index("a3"));
  }
  SUBCASE("crossing word resolves deterministically") {
    CurveWord w = parse_curve_word("path a1 a2 +0 | a2 a1 +0", g);
    REQUIRE(!w.is_cuff());
    CHECK(w.segments().size() == 2);
    CHECK(w.segments()[0].enter.pants != w.segments()[1].enter.pants);
  }
  SUBCASE("unknown label") {
    CHECK_THROWS_WITH_AS(parse_curve_word("cuff zz", g), doctest::Contains("unknown cuff"),
                         Error);
    CHECK_THROWS_AS(parse_curve_word("path a1 a9 +0 | a9 a1 +0", g), Error);
  }
  SUBCASE("adjacency violation") {
    MarkedSurface flute = parse_surface_spec(
        R"({"rule": {"kind": "flute", "N": 4, "cuff": "const:2", "twist": "const:0"}})");
    CHECK_THROWS_WITH_AS(parse_curve_word("path a1 a3 +0 | a3 a1 +0", flute.graph()),
                         doctest::Contains("adjacency violation"), Error);
  }
  SUBCASE("malformed words") {
    CHECK_THROWS_AS(parse_curve_word("walk a1", g), Error);
    CHECK_THROWS_AS(parse_curve_word("path a1 a2", g), Error);
    CHECK_THROWS_AS(parse_curve_word("path a1 a2 +x | a2 a1 +0", g), Error);
    CHECK_THROWS_AS(parse_curve_word("cuff a1 junk", g), Error);
  }
}

TEST_CASE("curve word round-trip with explicit ends") {
  MarkedSurface s = parse_surface_spec(kTwoPants);
  const PantsGraph& g = s.graph();
  CurveWord w = parse_curve_word("path a1 a2 +2 | a2 a1 -1", g);
  std::string text = serialize_curve_word(w, g);
  CurveWord w2 = parse_curve_word(text, g);
  CHECK(w == w2);
  CHECK(serialize_curve_word(w2, g) == text);
}

TEST_CASE("support of curve words") {
  MarkedSurface flute = parse_surface_spec(
      R"({"rule": {"kind": "flute", "N": 5, "cuff": "const:2", "twist": "const:0"}})");
  const PantsGraph& g = flute.graph();

  SUBCASE("cuff support: the cuff plus adjacent pants") {
    CurveSupport sup = support_of(g, CurveWord::cuff(g.cuff_index("a2")));
    CHECK(sup.cuffs == std::set<int>{g.cuff_index("a2")});
    CHECK(sup.pants == std::set<int>{1, 2});
  }
  SUBCASE("two-pants crossing curve: both pants, both cuffs") {
    MarkedSurface block = parse_surface_spec(kTwoPants);
    const PantsGraph& bg = block.graph();
    CurveWord w = parse_curve_word("path a1 a2 +0 | a2 a1 +0", bg);
    CurveSupport sup = support_of(bg, w);
    CHECK(sup.pants == std::set<int>{0, 1});
    CHECK(sup.cuffs == std::set<int>{bg.cuff_index("a1"), bg.cuff_index("a2")});
  }
  SUBCASE("walking word: the traversed pants") {
    // through P2, P3, P4 wrapping at the ends
    CurveWord w = parse_curve_word(
        "path a1.b a2.a +0 | a2.b a3.a +0 | a3.b a3.b +0 | a3.a a2.b +0 | a2.a a1.b +0 | "
        "a1.a a1.a +0",
        g);
    CurveSupport sup = support_of(g, w);
    CHECK(sup.pants == std::set<int>{0, 1, 2, 3});
    CHECK(sup.cuffs ==
          std::set<int>{g.cuff_index("a1"), g.cuff_index("a2"), g.cuff_index("a3")});
  }
  SUBCASE("invariant under rotation and reversal") {
    CurveWord w = parse_curve_word("path a1.b a1.b +1 | a1.a a1.a -2", g);
    CurveSupport sup = support_of(g, w);
    for (int r = 0; r < 2; ++r) {
      CurveSupport rs = support_of(g, w.rotated(r));
      CHECK(rs.pants == sup.pants);
      CHECK(rs.cuffs == sup.cuffs);
    }
    CurveSupport rev = support_of(g, w.reversed());
    CHECK(rev.pants == sup.pants);
    CHECK(rev.cuffs == sup.cuffs);
  }
}

TEST_CASE("lamination documents") {
  MarkedSurface s = parse_surface_spec(kTwoPants);
  const PantsGraph& g = s.graph();
  MulticurveLamination mu = parse_lamination("a1 1.0\na3 0.5  # comment\n\n", g);
  CHECK(mu.weight(g.cuff_index("a1")) == 1.0);
  CHECK(mu.weight(g.cuff_index("a2")) == 0.0);
  CHECK(mu.weight(g.cuff_index("a3")) == 0.5);

  MulticurveLamination rt = parse_lamination(serialize_lamination(mu, g), g);
  CHECK(rt == mu);

  CHECK_THROWS_AS(parse_lamination("zz 1.0", g), Error);
  CHECK_THROWS_AS(parse_lamination("a1 -1.0", g), Error);
  CHECK_THROWS_AS(parse_lamination("a1 1.0\na1 2.0", g), Error);
  CHECK_THROWS_AS(parse_lamination("a1", g), Error);
}

TEST_CASE("every lamination and word label resolves in the graph") {
  MarkedSurface s = parse_surface_spec(kTwoPants);
  MulticurveLamination mu;
  mu.weights[99] = 1.0;
  CHECK_THROWS_AS(mu.validate(s.graph()), Error);
}

TEST_CASE("handle gluing: one pants with two slots joined") {
  const char* doc = R"({
    "pants": ["P1"],
    "cuffs": [
      {"id": "h", "end_a": "P1.1", "end_b": "P1.2", "length": 2.0, "twist": 0.0},
      {"id": "f", "end_a": "P1.3", "end_b": "free", "length": 1.0}
    ]
  })";
  MarkedSurface s = parse_surface_spec(doc);
  CHECK(s.graph().pants_count() == 1);
  CHECK(s.graph().interior_cuff_count() == 1);
  CurveWord gamma = parse_curve_word("path h h +0", s.graph());
  CHECK(gamma.segments().size() == 1);
}
