#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypants/holonomy.hpp"
#include "hypants/model.hpp"

namespace hypants {

// Ordered finite family of distinct curve words with stable ids (the
// serialized word doubles as the id).
struct CurveFamily {
  std::vector<CurveWord> words;
  std::vector<std::string> ids;

  int size() const { return static_cast<int>(words.size()); }
};

CurveFamily make_family(const PantsGraph& g, std::vector<CurveWord> words);

// Lengths over a family together with the base-surface lengths used as
// normalizers. Entry order follows the family.
struct LengthSpectrumVector {
  std::vector<double> values;
  std::vector<double> base;
};

LengthSpectrumVector length_spectrum(const MarkedSurface& s, const CurveFamily& fam);

// i(mu, delta): each crossing of a supported cuff deposits its weight; a cuff
// word never crosses anything, so cuffs against any multicurve give 0.
double intersection_number(const PantsGraph& g, const MulticurveLamination& mu,
                           const CurveWord& delta);

double normalized_sup_norm(const LengthSpectrumVector& u);
double normalized_sup_distance(const LengthSpectrumVector& u, const LengthSpectrumVector& v);
double dls_distance(const LengthSpectrumVector& u, const LengthSpectrumVector& v);

double ls_norm(const PantsGraph& g, const MulticurveLamination& mu, const CurveFamily& fam,
               const LengthSpectrumVector& base);

// Half-width of the embedded collar around a closed geodesic of length l.
double collar_half_width(double l);

// Interval bracketing the Thurston norm of a cuff-supported multicurve:
// lower = max weight, upper = sum of w * (floor(1/(2 width)) + 1).
std::pair<double, double> thurston_norm_bounds(const MulticurveLamination& mu,
                                               const MarkedSurface& s);

LengthSpectrumVector projective_normalize(const LengthSpectrumVector& u);

// CSV emission: header curve_id,base_length,length,normalized_value.
std::string spectrum_csv(const CurveFamily& fam, const LengthSpectrumVector& v);
// Sidecar metadata: surface hash, family hash, grid.
std::string spectrum_meta_json(const MarkedSurface& s, const CurveFamily& fam,
                               const std::vector<double>& grid);

std::uint64_t fnv1a(const std::string& bytes);
std::string hash_hex(const std::string& bytes);
std::string format_double(double x);

}  // namespace hypants
