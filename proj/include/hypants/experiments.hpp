#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypants/deform.hpp"
#include "hypants/model.hpp"
#include "hypants/spectra.hpp"
#include "hypants/zoo.hpp"

namespace hypants {

// Deterministic run record: given identical inputs and seed the CSV text is
// byte-identical (runtime is reported separately, never in the CSV).
struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool pass = false;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;

  std::string to_csv() const;
};

// Checks |l_t(a) - t i(mu,a)| <= l_0(a) for every curve and grid point, i.e.
// the normalized deviation |X([f_t])(a)/(t l_0) - i(mu,a)/l_0| <= 1/t.
ExperimentReport run_earthquake_limit(const MarkedSurface& s, const MulticurveLamination& mu,
                                      const CurveFamily& fam, const std::vector<double>& t_grid);

// Samples small deformations (length log-scalings and twist offsets bounded
// by `perturbation`) and checks the local bi-Lipschitz bracket between the
// length-spectrum metric and the normalized sup distance.
ExperimentReport run_metric_comparison(const MarkedSurface& s, const CurveFamily& fam,
                                       int n_samples, double perturbation, std::uint64_t seed);

// Bounded decomposition check: seeded multicurves scaled to ls-norm
// `norm_bound` must meet i(beta, alpha*) <= norm_bound * sup l(alpha*).
ExperimentReport run_bounded_norm_check(const ZooRule& rule, int n_betas, double norm_bound,
                                        std::uint64_t seed);

// Shiga boundary convergence: requires check_lbound to pass (aborts with a
// diagnostic otherwise), then verifies sup_delta |i(beta_n,delta) -
// i(beta_*,delta)| / l(delta) <= 1/(n+1) for every n.
ExperimentReport run_shiga_boundary(int N, const LengthRule& growth, int max_segments);

struct ExperimentOptions {
  std::uint64_t seed = 1;
  int N = 0;              // 0 = experiment default
  int max_segments = 0;   // 0 = experiment default
  std::string growth;     // empty = sweep (shiga only)
  std::vector<double> t_grid;  // empty = {1,10,100,1000}
};

// Dispatch by name: earthquake-limit, metric-compare, bounded-norm, shiga.
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt);

}  // namespace hypants
