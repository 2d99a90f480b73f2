#include "hypants/deform.hpp"

#include <cmath>

namespace hypants {

void EarthquakePath::validate() const {
  mu.validate(base.graph());
  for (const auto& [cuff, w] : mu.weights)
    if (!base.graph().cuff(cuff).interior())
      fail(ErrorCode::Domain,
           "lamination supported on free-boundary cuff " + base.graph().cuff(cuff).label);
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
      fail(ErrorCode::InvalidArgument, "earthquake grid entries must be nonnegative");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      fail(ErrorCode::InvalidArgument, "earthquake grid must be strictly increasing");
  }
}

MarkedSurface twist_earthquake(const MarkedSurface& s, const MulticurveLamination& mu, double t) {
  mu.validate(s.graph());
  for (const auto& [cuff, w] : mu.weights)
    if (!s.graph().cuff(cuff).interior())
      fail(ErrorCode::Domain,
           "lamination supported on free-boundary cuff " + s.graph().cuff(cuff).label);
  return s.with_pending(mu, t);
}

std::vector<MarkedSurface> earthquake_path_sample(const EarthquakePath& p) {
  p.validate();
  std::vector<MarkedSurface> out;
  out.reserve(p.grid.size());
  for (double t : p.grid) out.push_back(twist_earthquake(p.base, p.mu, t));
  return out;
}

}  // namespace hypants
