#pragma once

// Numerical continuation of section outputs along paths of configurations:
// nearest-neighbor matching with a certified no-swap margin, adaptive step
// bisection, induced permutations of the new points for closed loops.

#include <functional>
#include <vector>

#include "confsect/braid.hpp"
#include "confsect/mobius.hpp"

namespace confsect::monodromy {

using mobius::Configuration;
using mobius::ProjectivePoint;
using mobius::SectionOutput;

// Piecewise-smooth family of ordered point tuples over [0, 1]; the
// configuration at t is the underlying unordered set.
struct ConfigPath {
  int n = 0;
  bool closed = false;
  std::function<std::vector<ProjectivePoint>(double)> at;
};

ConfigPath constant_path(const Configuration& config);

// Closed path exchanging points i and i+1 of the basepoint by a
// counterclockwise half-turn about their affine midpoint.
ConfigPath generator_loop(int n, int i, const Configuration& basepoint);

// Follows p then q.  For tracking purposes paths are set-valued, so no
// relabeling is needed as long as the endpoint sets agree.
ConfigPath concatenate(const ConfigPath& p, const ConfigPath& q);
ConfigPath reversed(const ConfigPath& p);

using SectionFn = std::function<SectionOutput(const Configuration&)>;

struct TrackOptions {
  int initial_steps = 48;
  double step_floor = 1e-6;
  double tol_sep = 1e-8;
  double closure_tol = 1e-8;
};

struct TrackingResult {
  braid::Permutation induced;     // new point j ends at the slot of point induced(j)
  double max_matching_gap = 0.0;  // largest single-step displacement accepted
  double min_interpoint_gap = 2.0;
  double closure_mismatch = 0.0;  // final-to-initial matching distance (closed paths)
  int steps = 0;
};

// Tracks section(path(t)) from t = 0 to 1.  Steps are bisected until the
// no-swap condition (min inter-point gap > 2x matching gap) certifies the
// correspondence; hitting the step floor raises NumericError.
TrackingResult track(const SectionFn& section, const ConfigPath& path,
                     const TrackOptions& opts = {});

// Induced permutation of the new points for each generator loop sigma_i.
std::vector<braid::Permutation> induced_permutation_table(const SectionFn& section,
                                                          const Configuration& basepoint,
                                                          const TrackOptions& opts = {});

// Tracks sigma_i sigma_{i+1} sigma_i against sigma_{i+1} sigma_i sigma_{i+1}
// and compares the induced permutations.
bool braid_relation_consistent(const SectionFn& section, const Configuration& basepoint,
                               int i, const TrackOptions& opts = {});

// n-th roots of unity.
Configuration roots_of_unity_basepoint(int n);

}  // namespace confsect::monodromy
