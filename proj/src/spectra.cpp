#include "hypants/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hypants {

CurveFamily make_family(const PantsGraph& g, std::vector<CurveWord> words) {
  CurveFamily fam;
  fam.words = std::move(words);
  fam.ids.reserve(fam.words.size());
  for (const CurveWord& w : fam.words) {
    w.validate(g);
    fam.ids.push_back(serialize_curve_word(w, g));
  }
  if (fam.words.empty()) fail(ErrorCode::InvalidArgument, "empty curve family");
  return fam;
}

LengthSpectrumVector length_spectrum(const MarkedSurface& s, const CurveFamily& fam) {
  LengthSpectrumVector out;
  out.values.reserve(fam.size());
  out.base.reserve(fam.size());
  FnCoordinates fn = s.effective_fn();
  for (const CurveWord& w : fam.words) {
    out.values.push_back(curve_length(s.graph(), fn, w));
    out.base.push_back(curve_length(s.graph(), s.base_fn(), w));
  }
  return out;
}

double intersection_number(const PantsGraph& g, const MulticurveLamination& mu,
                           const CurveWord& delta) {
  delta.validate(g);
  if (delta.is_cuff()) return 0.0;
  double total = 0.0;
  for (const PathSegment& s : delta.segments()) total += mu.weight(g.cuff_at(s.exit));
  return total;
}

namespace {

void check_same_shape(const LengthSpectrumVector& u, const LengthSpectrumVector& v) {
  if (u.values.size() != v.values.size() || u.base.size() != v.base.size())
    fail(ErrorCode::InvalidArgument, "length spectrum vectors over different families");
  for (size_t i = 0; i < u.base.size(); ++i)
    if (u.base[i] != v.base[i])
      fail(ErrorCode::InvalidArgument, "length spectrum vectors with different base lengths");
}

void check_base(const LengthSpectrumVector& u) {
  for (double x : u.base)
    if (!(x > 0.0) || !std::isfinite(x))
      fail(ErrorCode::Domain, "length spectrum vector has a nonpositive base entry");
}

void check_positive(const LengthSpectrumVector& u) {
  check_base(u);
  for (double x : u.values)
    if (!(x > 0.0) || !std::isfinite(x))
      fail(ErrorCode::Domain, "length spectrum vector has a nonpositive entry");
}

}  // namespace

// The norm lives on R^S_{>=0}: zero entries are fine, only normalizers must
// be positive.
double normalized_sup_norm(const LengthSpectrumVector& u) {
  check_base(u);
  double sup = 0.0;
  for (size_t i = 0; i < u.values.size(); ++i)
    sup = std::max(sup, std::fabs(u.values[i]) / u.base[i]);
  return sup;
}

double normalized_sup_distance(const LengthSpectrumVector& u, const LengthSpectrumVector& v) {
  check_same_shape(u, v);
  check_base(u);
  double sup = 0.0;
  for (size_t i = 0; i < u.values.size(); ++i)
    sup = std::max(sup, std::fabs(u.values[i] - v.values[i]) / u.base[i]);
  return sup;
}

double dls_distance(const LengthSpectrumVector& u, const LengthSpectrumVector& v) {
  check_same_shape(u, v);
  check_positive(u);
  check_positive(v);
  double sup = 0.0;
  for (size_t i = 0; i < u.values.size(); ++i)
    sup = std::max(sup, std::fabs(std::log(v.values[i] / u.values[i])));
  return sup;
}

double ls_norm(const PantsGraph& g, const MulticurveLamination& mu, const CurveFamily& fam,
               const LengthSpectrumVector& base) {
  if (fam.size() == 0) fail(ErrorCode::InvalidArgument, "ls_norm over an empty family");
  double sup = 0.0;
  for (int i = 0; i < fam.size(); ++i)
    sup = std::max(sup, intersection_number(g, mu, fam.words[i]) / base.base[i]);
  return sup;
}

double collar_half_width(double l) {
  if (!(l > 0.0)) fail(ErrorCode::Domain, "collar width needs a positive length");
  return std::asinh(1.0 / std::sinh(0.5 * l));
}

std::pair<double, double> thurston_norm_bounds(const MulticurveLamination& mu,
                                               const MarkedSurface& s) {
  if (mu.empty()) fail(ErrorCode::InvalidArgument, "Thurston norm of an empty multicurve");
  mu.validate(s.graph());
  double lower = 0.0;
  double upper = 0.0;
  for (const auto& [cuff, w] : mu.weights) {
    lower = std::max(lower, w);
    double width = collar_half_width(s.length(cuff));
    upper += w * (std::floor(1.0 / (2.0 * width)) + 1.0);
  }
  return {lower, upper};
}

LengthSpectrumVector projective_normalize(const LengthSpectrumVector& u) {
  double n = normalized_sup_norm(u);
  if (!(n > 0.0)) fail(ErrorCode::Domain, "cannot normalize the zero vector");
  LengthSpectrumVector out = u;
  for (double& x : out.values) x /= n;
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string spectrum_csv(const CurveFamily& fam, const LengthSpectrumVector& v) {
  std::string out = "curve_id,base_length,length,normalized_value\n";
  for (int i = 0; i < fam.size(); ++i) {
    out += fam.ids[i] + "," + format_double(v.base[i]) + "," + format_double(v.values[i]) + "," +
           format_double(v.values[i] / v.base[i]) + "\n";
  }
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string spectrum_meta_json(const MarkedSurface& s, const CurveFamily& fam,
                               const std::vector<double>& grid) {
  std::string family_text;
  for (const std::string& id : fam.ids) family_text += id + "\n";
  std::string out = "{\n";
  out += "  \"surface_hash\": \"" + hash_hex(serialize_surface(s)) + "\",\n";
  out += "  \"family_hash\": \"" + hash_hex(family_text) + "\",\n";
  out += "  \"family_size\": " + std::to_string(fam.size()) + ",\n";
  out += "  \"grid\": [";
  for (size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ", ";
    out += format_double(grid[i]);
  }
  out += "]\n}\n";
  return out;
}

}  // namespace hypants
