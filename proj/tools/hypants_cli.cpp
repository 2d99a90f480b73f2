// hypants command line driver. Talks to the library strictly through the C
// API in hypants.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypants.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << text;
}

[[noreturn]] void die(hypants_status st) {
  std::cerr << "error (" << static_cast<int>(st) << "): " << hypants_last_error() << "\n";
  std::exit(1);
}

hypants_surface* load_surface(const std::string& path) {
  hypants_surface* s = nullptr;
  if (auto st = hypants_surface_parse(read_file(path).c_str(), &s)) die(st);
  return s;
}

hypants_curves* load_curves(hypants_surface* s, const std::string& path) {
  hypants_curves* c = nullptr;
  if (auto st = hypants_curves_parse(s, read_file(path).c_str(), &c)) die(st);
  return c;
}

std::string take_string(char* owned) {
  std::string out(owned ? owned : "");
  hypants_string_free(owned);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"length spectra of pants-decomposed hyperbolic surfaces"};
  app.require_subcommand(1);

  std::string surface_path, curves_path, mu_path, out_path;
  std::vector<double> t_grid;
  int max_segments = 0;
  int N = 0;
  std::uint64_t seed = 1;
  std::string growth;
  std::string experiment_name;

  auto* build = app.add_subcommand("build", "parse and validate a surface document");
  build->add_option("surface", surface_path, "surface document (JSON)")->required();
  build->add_option("--out", out_path, "write the canonical serialized document here");

  auto* length = app.add_subcommand("length", "geodesic lengths of curves");
  length->add_option("surface", surface_path)->required();
  length->add_option("curves", curves_path, "curve document, one word per line")->required();

  auto* spectrum = app.add_subcommand("spectrum", "length spectrum CSV over a curve family");
  spectrum->add_option("surface", surface_path)->required();
  spectrum->add_option("curves", curves_path)->required();
  spectrum->add_option("--out", out_path, "CSV path (sidecar <out>.meta.json); stdout if absent");
  spectrum->add_option("--max-segments", max_segments,
                       "enumerate taut words up to this size instead of reading curves");

  auto* quake = app.add_subcommand("quake", "earthquake deformation along a multicurve");
  quake->add_option("surface", surface_path)->required();
  quake->add_option("mu", mu_path, "lamination document: lines '<cuff-id> <weight>'")->required();
  quake->add_option("--t", t_grid, "twist magnitudes")->required();

  auto* experiment = app.add_subcommand("experiment", "run a verification experiment");
  experiment
      ->add_option("name", experiment_name,
                   "earthquake-limit | metric-compare | bounded-norm | shiga")
      ->required();
  experiment->add_option("--seed", seed, "random seed (default 1)");
  experiment->add_option("--out", out_path, "report CSV path; stdout if absent");
  experiment->add_option("--max-segments", max_segments, "taut word enumeration bound");
  experiment->add_option("--N", N, "surface truncation size");
  experiment->add_option("--growth", growth, "shiga growth rule, e.g. exp:0.5");
  experiment->add_option("--t", t_grid, "earthquake grid");

  CLI11_PARSE(app, argc, argv);

  if (*build) {
    hypants_surface* s = load_surface(surface_path);
    int pants = 0, cuffs = 0, interior = 0;
    hypants_surface_counts(s, &pants, &cuffs, &interior);
    char* doc = nullptr;
    if (auto st = hypants_surface_serialize(s, &doc)) die(st);
    std::string text = take_string(doc);
    std::cout << "surface ok: " << pants << " pants, " << cuffs << " cuffs (" << interior
              << " interior)\n";
    if (!out_path.empty())
      write_file(out_path, text + "\n");
    else
      std::cout << text << "\n";
    hypants_surface_free(s);
    return 0;
  }

  if (*length) {
    hypants_surface* s = load_surface(surface_path);
    hypants_curves* c = load_curves(s, curves_path);
    int n = 0;
    hypants_curves_count(c, &n);
    printf("curve_id,length\n");
    for (int i = 0; i < n; ++i) {
      char* id = nullptr;
      hypants_curves_id(c, i, &id);
      double len = 0;
      if (auto st = hypants_curve_length(s, c, i, &len)) die(st);
      printf("%s,%.17g\n", take_string(id).c_str(), len);
    }
    hypants_curves_free(c);
    hypants_surface_free(s);
    return 0;
  }

  if (*spectrum) {
    hypants_surface* s = load_surface(surface_path);
    hypants_curves* c = nullptr;
    if (max_segments > 0) {
      if (auto st = hypants_curves_enumerate(s, max_segments, &c)) die(st);
    } else {
      c = load_curves(s, curves_path);
    }
    hypants_spectrum* v = nullptr;
    if (auto st = hypants_spectrum_compute(s, c, &v)) die(st);
    char* csv = nullptr;
    char* meta = nullptr;
    if (auto st = hypants_spectrum_csv(v, &csv, &meta)) die(st);
    std::string csv_text = take_string(csv);
    std::string meta_text = take_string(meta);
    if (!out_path.empty()) {
      write_file(out_path, csv_text);
      write_file(out_path + ".meta.json", meta_text);
    } else {
      std::cout << csv_text;
    }
    hypants_spectrum_free(v);
    hypants_curves_free(c);
    hypants_surface_free(s);
    return 0;
  }

  if (*quake) {
    for (size_t i = 0; i < t_grid.size(); ++i) {
      bool ok = t_grid[i] >= 0.0 && (i == 0 || t_grid[i] > t_grid[i - 1]);
      if (!ok) {
        std::cerr << "error: --t grid must be nonnegative and strictly increasing\n";
        return 1;
      }
    }
    hypants_surface* s = load_surface(surface_path);
    hypants_lamination* mu = nullptr;
    if (auto st = hypants_lamination_parse(s, read_file(mu_path).c_str(), &mu)) die(st);
    std::cout << "[\n";
    for (size_t i = 0; i < t_grid.size(); ++i) {
      hypants_surface* st_surface = nullptr;
      if (auto st = hypants_twist(s, mu, t_grid[i], &st_surface)) die(st);
      char* doc = nullptr;
      if (auto st = hypants_surface_serialize(st_surface, &doc)) die(st);
      std::cout << take_string(doc) << (i + 1 < t_grid.size() ? ",\n" : "\n");
      hypants_surface_free(st_surface);
    }
    std::cout << "]\n";
    hypants_lamination_free(mu);
    hypants_surface_free(s);
    return 0;
  }

  if (*experiment) {
    std::ostringstream params;
    params << "{\"seed\": " << seed;
    if (N > 0) params << ", \"N\": " << N;
    if (max_segments > 0) params << ", \"max_segments\": " << max_segments;
    if (!growth.empty()) params << ", \"growth\": \"" << growth << "\"";
    if (!t_grid.empty()) {
      params << ", \"t_grid\": [";
      for (size_t i = 0; i < t_grid.size(); ++i) params << (i ? ", " : "") << t_grid[i];
      params << "]";
    }
    params << "}";
    char* csv = nullptr;
    int pass = 0;
    if (auto st = hypants_experiment_run(experiment_name.c_str(), params.str().c_str(), &csv,
                                         &pass))
      die(st);
    std::string csv_text = take_string(csv);
    if (!out_path.empty())
      write_file(out_path, csv_text);
    else
      std::cout << csv_text;
    std::cerr << "verdict: " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
  }

  return 0;
}
