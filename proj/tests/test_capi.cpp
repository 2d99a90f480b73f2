// Exercises the shared-library surface: opaque handles, error codes, strings.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "hypants.h"

namespace {

const char* kFluteDoc =
    R"({"rule": {"kind": "flute", "N": 5, "cuff": "const:2", "twist": "const:0"}})";

std::string take(char* s) {
  std::string out(s ? s : "");
  hypants_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("surface lifecycle and counts") {
  hypants_surface* s = nullptr;
  REQUIRE(hypants_surface_parse(kFluteDoc, &s) == HYPANTS_OK);
  int pants = 0, cuffs = 0, interior = 0;
  CHECK(hypants_surface_counts(s, &pants, &cuffs, &interior) == HYPANTS_OK);
  CHECK(pants == 5);
  CHECK(interior == 4);

  char* doc = nullptr;
  REQUIRE(hypants_surface_serialize(s, &doc) == HYPANTS_OK);
  std::string text = take(doc);
  hypants_surface* s2 = nullptr;
  REQUIRE(hypants_surface_parse(text.c_str(), &s2) == HYPANTS_OK);
  char* doc2 = nullptr;
  REQUIRE(hypants_surface_serialize(s2, &doc2) == HYPANTS_OK);
  CHECK(take(doc2) == text);

  hypants_surface_free(s2);
  hypants_surface_free(s);
}

TEST_CASE("parse errors surface as status codes with messages") {
  hypants_surface* s = nullptr;
  CHECK(hypants_surface_parse("{oops", &s) == HYPANTS_ERR_PARSE);
  CHECK(std::string(hypants_last_error()).size() > 0);
  CHECK(hypants_surface_parse(nullptr, &s) == HYPANTS_ERR_INVALID_ARGUMENT);

  const char* bad = R"({"pants": ["P1"], "cuffs": [
    {"id": "c1", "end_a": "P1.1", "end_b": "free", "length": -1.0},
    {"id": "c2", "end_a": "P1.2", "end_b": "free", "length": 1.0},
    {"id": "c3", "end_a": "P1.3", "end_b": "free", "length": 1.0}]})";
  CHECK(hypants_surface_parse(bad, &s) == HYPANTS_ERR_PARSE);
  CHECK(std::string(hypants_last_error()).find("nonpositive length") != std::string::npos);
}

TEST_CASE("curves, lengths, spectra, intersections") {
  hypants_surface* s = nullptr;
  REQUIRE(hypants_surface_parse(kFluteDoc, &s) == HYPANTS_OK);

  hypants_curves* c = nullptr;
  REQUIRE(hypants_curves_parse(s, "cuff a1\npath a1.b a1.b +0 | a1.a a1.a +0\n", &c) ==
          HYPANTS_OK);
  int n = 0;
  CHECK(hypants_curves_count(c, &n) == HYPANTS_OK);
  CHECK(n == 2);

  double len = 0.0;
  CHECK(hypants_curve_length(s, c, 0, &len) == HYPANTS_OK);
  CHECK(len == doctest::Approx(2.0));
  CHECK(hypants_curve_length(s, c, 5, &len) == HYPANTS_ERR_INVALID_ARGUMENT);

  hypants_spectrum* v = nullptr;
  REQUIRE(hypants_spectrum_compute(s, c, &v) == HYPANTS_OK);
  int size = 0;
  CHECK(hypants_spectrum_size(v, &size) == HYPANTS_OK);
  CHECK(size == 2);
  double base = 0.0, value = 0.0;
  CHECK(hypants_spectrum_entry(v, 0, &base, &value) == HYPANTS_OK);
  CHECK(base == value);

  char* csv = nullptr;
  char* meta = nullptr;
  REQUIRE(hypants_spectrum_csv(v, &csv, &meta) == HYPANTS_OK);
  CHECK(take(csv).find("curve_id,base_length,length,normalized_value") == 0);
  CHECK(take(meta).find("surface_hash") != std::string::npos);

  hypants_lamination* mu = nullptr;
  REQUIRE(hypants_lamination_parse(s, "a1 1.0\n", &mu) == HYPANTS_OK);
  double inter = -1.0;
  CHECK(hypants_intersection(s, mu, c, 1, &inter) == HYPANTS_OK);
  CHECK(inter == 2.0);

  // twisting moves the crossing curve but not the cuff
  hypants_surface* t = nullptr;
  REQUIRE(hypants_twist(s, mu, 10.0, &t) == HYPANTS_OK);
  hypants_spectrum* vt = nullptr;
  REQUIRE(hypants_spectrum_compute(t, c, &vt) == HYPANTS_OK);
  double tb = 0.0, tv = 0.0;
  CHECK(hypants_spectrum_entry(vt, 0, &tb, &tv) == HYPANTS_OK);
  CHECK(tv == doctest::Approx(2.0));
  CHECK(hypants_spectrum_entry(vt, 1, &tb, &tv) == HYPANTS_OK);
  CHECK(tv >= 10.0 * 2.0 - tb - 1e-9);

  double dls = 0.0, sup = 0.0;
  CHECK(hypants_dls_distance(v, vt, &dls) == HYPANTS_OK);
  CHECK(hypants_sup_distance(v, vt, &sup) == HYPANTS_OK);
  CHECK(dls > 0.0);
  CHECK(sup > 0.0);

  hypants_spectrum_free(vt);
  hypants_surface_free(t);
  hypants_lamination_free(mu);
  hypants_spectrum_free(v);
  hypants_curves_free(c);
  hypants_surface_free(s);
}

TEST_CASE("lamination on a free boundary cannot be twisted") {
  hypants_surface* s = nullptr;
  REQUIRE(hypants_surface_parse(kFluteDoc, &s) == HYPANTS_OK);
  hypants_lamination* mu = nullptr;
  REQUIRE(hypants_lamination_parse(s, "b1 1.0\n", &mu) == HYPANTS_OK);
  hypants_surface* t = nullptr;
  CHECK(hypants_twist(s, mu, 1.0, &t) == HYPANTS_ERR_DOMAIN);
  hypants_lamination_free(mu);
  hypants_surface_free(s);
}

TEST_CASE("enumeration through the C API") {
  hypants_surface* s = nullptr;
  REQUIRE(hypants_surface_parse(kFluteDoc, &s) == HYPANTS_OK);
  hypants_curves* c = nullptr;
  REQUIRE(hypants_curves_enumerate(s, 2, &c) == HYPANTS_OK);
  int n = 0;
  CHECK(hypants_curves_count(c, &n) == HYPANTS_OK);
  CHECK(n > 10);
  char* id = nullptr;
  REQUIRE(hypants_curves_id(c, 0, &id) == HYPANTS_OK);
  CHECK(take(id).rfind("cuff ", 0) == 0);
  hypants_curves_free(c);
  hypants_surface_free(s);
}

TEST_CASE("experiments through the C API") {
  char* csv = nullptr;
  int pass = -1;
  REQUIRE(hypants_experiment_run(
              "earthquake-limit",
              R"({"seed": 2, "N": 5, "max_segments": 2, "t_grid": [1, 10]})", &csv,
              &pass) == HYPANTS_OK);
  std::string text = take(csv);
  CHECK(pass == 1);
  CHECK(text.find("# experiment=earthquake-limit") == 0);
  CHECK(text.find("# verdict=pass") != std::string::npos);

  CHECK(hypants_experiment_run("nope", "{}", &csv, &pass) == HYPANTS_ERR_INVALID_ARGUMENT);
  CHECK(hypants_experiment_run("shiga", "{not json", &csv, &pass) == HYPANTS_ERR_PARSE);
}
