#include "hypants.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "hypants/experiments.hpp"
#include "hypants/holonomy.hpp"
#include "hypants/model.hpp"
#include "hypants/spectra.hpp"
#include "hypants/zoo.hpp"

using namespace hypants;

extern "C" {

struct hypants_surface {
  MarkedSurface rep;
};

struct hypants_curves {
  CurveFamily rep;
};

struct hypants_lamination {
  MulticurveLamination rep;
};

struct hypants_spectrum {
  LengthSpectrumVector rep;
  CurveFamily fam;
  std::string surface_doc;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

hypants_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return HYPANTS_ERR_PARSE;
    case ErrorCode::InvalidArgument:
      return HYPANTS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain:
      return HYPANTS_ERR_DOMAIN;
    case ErrorCode::Numeric:
      return HYPANTS_ERR_NUMERIC;
    case ErrorCode::Io:
      return HYPANTS_ERR_IO;
    case ErrorCode::Internal:
      return HYPANTS_ERR_INTERNAL;
  }
  return HYPANTS_ERR_INTERNAL;
}

template <typename F>
hypants_status guarded(F&& f) {
  try {
    f();
    return HYPANTS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return HYPANTS_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HYPANTS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hypants_status require(bool ok, const char* what) {
  if (ok) return HYPANTS_OK;
  g_last_error = what;
  return HYPANTS_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* hypants_last_error(void) { return g_last_error.c_str(); }

void hypants_string_free(char* s) { std::free(s); }

hypants_status hypants_surface_parse(const char* text, hypants_surface** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new hypants_surface{parse_surface_spec(text)}; });
}

hypants_status hypants_surface_serialize(const hypants_surface* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(serialize_surface(s->rep)); });
}

void hypants_surface_free(hypants_surface* s) { delete s; }

hypants_status hypants_surface_counts(const hypants_surface* s, int* pants, int* cuffs,
                                      int* interior_cuffs) {
  if (auto st = require(s != nullptr, "null argument")) return st;
  return guarded([&] {
    if (pants) *pants = s->rep.graph().pants_count();
    if (cuffs) *cuffs = s->rep.graph().cuff_count();
    if (interior_cuffs) *interior_cuffs = s->rep.graph().interior_cuff_count();
  });
}

hypants_status hypants_curves_parse(const hypants_surface* s, const char* text,
                                    hypants_curves** out) {
  if (auto st = require(s && text && out, "null argument")) return st;
  return guarded([&] {
    std::vector<CurveWord> words;
    std::string input(text);
    size_t pos = 0;
    while (pos <= input.size()) {
      size_t end = input.find('\n', pos);
      std::string line = input.substr(pos, end == std::string::npos ? end : end - pos);
      pos = end == std::string::npos ? input.size() + 1 : end + 1;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) words.push_back(parse_curve_word(line, s->rep.graph()));
    }
    *out = new hypants_curves{make_family(s->rep.graph(), std::move(words))};
  });
}

hypants_status hypants_curves_enumerate(const hypants_surface* s, int max_segments,
                                        hypants_curves** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new hypants_curves{enumerate_taut_words(s->rep, max_segments)}; });
}

hypants_status hypants_curves_count(const hypants_curves* c, int* out) {
  if (auto st = require(c && out, "null argument")) return st;
  *out = c->rep.size();
  return HYPANTS_OK;
}

hypants_status hypants_curves_id(const hypants_curves* c, int index, char** out) {
  if (auto st = require(c && out, "null argument")) return st;
  if (auto st = require(index >= 0 && index < c->rep.size(), "curve index out of range"))
    return st;
  *out = dup_string(c->rep.ids[index]);
  return HYPANTS_OK;
}

void hypants_curves_free(hypants_curves* c) { delete c; }

hypants_status hypants_lamination_parse(const hypants_surface* s, const char* text,
                                        hypants_lamination** out) {
  if (auto st = require(s && text && out, "null argument")) return st;
  return guarded([&] { *out = new hypants_lamination{parse_lamination(text, s->rep.graph())}; });
}

void hypants_lamination_free(hypants_lamination* m) { delete m; }

hypants_status hypants_curve_length(const hypants_surface* s, const hypants_curves* c, int index,
                                    double* out) {
  if (auto st = require(s && c && out, "null argument")) return st;
  if (auto st = require(index >= 0 && index < c->rep.size(), "curve index out of range"))
    return st;
  return guarded([&] { *out = curve_length(s->rep, c->rep.words[index]); });
}

hypants_status hypants_spectrum_compute(const hypants_surface* s, const hypants_curves* c,
                                        hypants_spectrum** out) {
  if (auto st = require(s && c && out, "null argument")) return st;
  return guarded([&] {
    *out = new hypants_spectrum{length_spectrum(s->rep, c->rep), c->rep,
                                serialize_surface(s->rep)};
  });
}

hypants_status hypants_spectrum_size(const hypants_spectrum* v, int* out) {
  if (auto st = require(v && out, "null argument")) return st;
  *out = static_cast<int>(v->rep.values.size());
  return HYPANTS_OK;
}

hypants_status hypants_spectrum_entry(const hypants_spectrum* v, int index, double* base,
                                      double* value) {
  if (auto st = require(v != nullptr, "null argument")) return st;
  if (auto st = require(index >= 0 && index < static_cast<int>(v->rep.values.size()),
                        "spectrum index out of range"))
    return st;
  if (base) *base = v->rep.base[index];
  if (value) *value = v->rep.values[index];
  return HYPANTS_OK;
}

hypants_status hypants_spectrum_csv(const hypants_spectrum* v, char** csv, char** meta_json) {
  if (auto st = require(v != nullptr, "null argument")) return st;
  return guarded([&] {
    if (csv) *csv = dup_string(spectrum_csv(v->fam, v->rep));
    if (meta_json) {
      std::string family_text;
      for (const std::string& id : v->fam.ids) family_text += id + "\n";
      std::string meta = "{\n";
      meta += "  \"surface_hash\": \"" + hash_hex(v->surface_doc) + "\",\n";
      meta += "  \"family_hash\": \"" + hash_hex(family_text) + "\",\n";
      meta += "  \"family_size\": " + std::to_string(v->fam.size()) + ",\n";
      meta += "  \"grid\": []\n}\n";
      *meta_json = dup_string(meta);
    }
  });
}

void hypants_spectrum_free(hypants_spectrum* v) { delete v; }

hypants_status hypants_intersection(const hypants_surface* s, const hypants_lamination* m,
                                    const hypants_curves* c, int index, double* out) {
  if (auto st = require(s && m && c && out, "null argument")) return st;
  if (auto st = require(index >= 0 && index < c->rep.size(), "curve index out of range"))
    return st;
  return guarded(
      [&] { *out = intersection_number(s->rep.graph(), m->rep, c->rep.words[index]); });
}

hypants_status hypants_dls_distance(const hypants_spectrum* u, const hypants_spectrum* v,
                                    double* out) {
  if (auto st = require(u && v && out, "null argument")) return st;
  return guarded([&] { *out = dls_distance(u->rep, v->rep); });
}

hypants_status hypants_sup_distance(const hypants_spectrum* u, const hypants_spectrum* v,
                                    double* out) {
  if (auto st = require(u && v && out, "null argument")) return st;
  return guarded([&] { *out = normalized_sup_distance(u->rep, v->rep); });
}

hypants_status hypants_twist(const hypants_surface* s, const hypants_lamination* m, double t,
                             hypants_surface** out) {
  if (auto st = require(s && m && out, "null argument")) return st;
  return guarded([&] {
    EarthquakePath probe{s->rep, m->rep, {}};
    probe.validate();
    *out = new hypants_surface{twist_earthquake(s->rep, m->rep, t)};
  });
}

hypants_status hypants_experiment_run(const char* name, const char* params_json, char** csv,
                                      int* pass) {
  if (auto st = require(name != nullptr, "null argument")) return st;
  return guarded([&] {
    ExperimentOptions opt;
    if (params_json && *params_json) {
      nlohmann::json p = nlohmann::json::parse(params_json);
      opt.seed = p.value("seed", std::uint64_t{1});
      opt.N = p.value("N", 0);
      opt.max_segments = p.value("max_segments", 0);
      opt.growth = p.value("growth", std::string{});
      if (p.contains("t_grid"))
        for (const auto& t : p["t_grid"]) opt.t_grid.push_back(t.get<double>());
    }
    ExperimentReport rep = run_experiment(name, opt);
    if (csv) *csv = dup_string(rep.to_csv());
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

}  // extern "C"
