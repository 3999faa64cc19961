#pragma once

// The general-n section: for each old point z_i, build the rational map
// R_{z_i} of degree d = (n-1)(n-2) (pole of order d at z_i, zero of order
// n-2 at every other old point) and take the d preimages of a large level
// value.  One level adds n(n-1)(n-2) points clustered around the old ones.
//
// R is only ever evaluated in factored homogeneous form.  The preimages of a
// level are located by Newton iteration in a unitary chart centered at the
// pole, starting from the d-th roots of c_i / epsilon, where c_i is the
// leading coefficient of R at the pole.  The level modulus is chosen so that
// a maximum-modulus bound certifies that every preimage lies inside the
// cluster ball.

#include <complex>
#include <vector>

#include "confsect/mobius.hpp"

namespace confsect::spacelevel {

using mobius::Complex;
using mobius::Configuration;
using mobius::ProjectivePoint;
using mobius::SectionOutput;

struct Options {
  double scale_k = 1e3;          // K: growth factor on top of the certified bound
  double cluster_radius = 0.05;  // chordal budget for each preimage cluster
  double residual_tol = 1e-9;    // certification of |R/eps - 1| per preimage
  double tol_sep = 1e-8;
  int max_newton = 80;
};

struct RationalMap {
  int base_index = 1;  // 1-based index of the pole point
  int degree = 0;      // (n-1)(n-2)
  std::vector<Complex> numerator;    // ascending affine coefficients
  std::vector<Complex> denominator;  // same degree as the numerator
  std::vector<ProjectivePoint> points;  // the configuration, for factored evaluation
};

// Product over ordered pairs (a, b), a != b, a, b != i of M_{z_a, z_b, z_i}.
RationalMap build_rational_map(const Configuration& config, int i);

// Factored homogeneous evaluation; exact at poles and zeros.
ProjectivePoint evaluate_map(const RationalMap& map, const ProjectivePoint& w);

// Same value through the expanded coefficient sequences (cross-check path).
ProjectivePoint evaluate_map_coefficients(const RationalMap& map, const ProjectivePoint& w);

// eps_l(config): modulus large enough that every R_{z_i}-preimage stays
// within the cluster budget, phase 2 pi l / 64 (modulus doubling past 64
// levels keeps images pairwise disjoint for every l).
Complex level_value(const Configuration& config, int level, const Options& opts = {});

// k levels of n clusters: exactly k n (n-1)(n-2) points.  n = 3 delegates to
// the cross-ratio section with m = 6k.
SectionOutput section_general(const Configuration& config, int levels,
                              const Options& opts = {});

}  // namespace confsect::spacelevel
