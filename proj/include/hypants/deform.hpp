#pragma once

#include <vector>

#include "hypants/model.hpp"

namespace hypants {

// Earthquake along a cuff-supported multicurve, realized as the simultaneous
// FN twist tau_n -> tau_n + t * w_n over the support.
struct EarthquakePath {
  MarkedSurface base;
  MulticurveLamination mu;
  std::vector<double> grid;  // strictly increasing, t >= 0

  void validate() const;
};

MarkedSurface twist_earthquake(const MarkedSurface& s, const MulticurveLamination& mu, double t);

std::vector<MarkedSurface> earthquake_path_sample(const EarthquakePath& p);

}  // namespace hypants
