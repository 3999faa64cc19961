#pragma once

// Riemann-sphere arithmetic in homogeneous coordinates: projective points,
// Mobius maps, the cross-ratio with its D3 orbit, the multivalued fiber of
// the unordered cross-ratio, and the three-point section built from it.
// Nothing in here switches charts; infinity is the ordinary point [1 : 0].

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "confsect/errors.hpp"

namespace confsect::mobius {

using Complex = std::complex<double>;

struct Tolerances {
  double sep = 1e-8;    // distinctness certificates
  double eval = 1e-10;  // algebraic identities at unit scale
};

// Point of CP^1 as a pair [a : b] with affine value a/b; infinity is [1 : 0].
// Stored with the largest-modulus component scaled to 1.
class ProjectivePoint {
 public:
  ProjectivePoint() : a_(0.0), b_(1.0) {}
  ProjectivePoint(Complex a, Complex b);

  static ProjectivePoint from_complex(Complex z) { return ProjectivePoint(z, 1.0); }
  static ProjectivePoint infinity() { return ProjectivePoint(1.0, 0.0); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  bool is_infinity() const { return b_ == 0.0; }
  // Affine value; infinite for [1 : 0].
  Complex value() const { return a_ / b_; }

 private:
  Complex a_, b_;
};

// Fubini-Study chordal metric, normalized to [0, 1]; 1 for antipodes.
double chordal_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// a_p b_q - a_q b_p; zero iff the points coincide.
Complex bracket(const ProjectivePoint& p, const ProjectivePoint& q);

bool approx_equal(const ProjectivePoint& p, const ProjectivePoint& q, double tol);

class MobiusMap {
 public:
  MobiusMap() : alpha_(1), beta_(0), gamma_(0), delta_(1) {}
  // Determinant must be nonzero; stored with unit determinant up to sign.
  MobiusMap(Complex alpha, Complex beta, Complex gamma, Complex delta);

  ProjectivePoint apply(const ProjectivePoint& p) const;
  MobiusMap inverse() const;
  // apply(compose(m1, m2), p) = apply(m1, apply(m2, p)).
  static MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Complex gamma() const { return gamma_; }
  Complex delta() const { return delta_; }

 private:
  Complex alpha_, beta_, gamma_, delta_;
};

// The unique Mobius map with z1 -> 0, z2 -> 1, z3 -> infinity.
// Throws NumericError when two of the inputs coincide.
MobiusMap mobius_from_triple(const ProjectivePoint& z1, const ProjectivePoint& z2,
                             const ProjectivePoint& z3);

// [z1, z2; z3, z4] = M_{z1,z2,z3}(z4) = (z2-z3)(z4-z1) / ((z2-z1)(z4-z3)).
ProjectivePoint cross_ratio(const ProjectivePoint& z1, const ProjectivePoint& z2,
                            const ProjectivePoint& z3, const ProjectivePoint& z4);

// Orbit of lambda under {l, 1/l, 1-l, 1/(1-l), (l-1)/l, l/(l-1)}, deduplicated.
std::vector<ProjectivePoint> d3_orbit(const ProjectivePoint& lambda, double tol = 1e-10);

// All z4 whose unordered cross-ratio with {z1, z2, z3} contains lambda.
// lambda in {0, 1, inf} is rejected: the fiber would meet the configuration.
std::vector<ProjectivePoint> cross_fiber(const ProjectivePoint& z1, const ProjectivePoint& z2,
                                         const ProjectivePoint& z3,
                                         const ProjectivePoint& lambda,
                                         const Tolerances& tol = {});

// Unordered tuple of pairwise-distinct points with a separation certificate.
class Configuration {
 public:
  Configuration(std::vector<ProjectivePoint> points, double tol_sep = 1e-8);

  int n() const { return static_cast<int>(points_.size()); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  double separation() const { return separation_; }

  Configuration transformed(const MobiusMap& m) const;

 private:
  std::vector<ProjectivePoint> points_;
  double separation_;
};

struct SectionOutput {
  std::vector<ProjectivePoint> new_points;
  int m = 0;
  std::string method;
  std::string params;
};

// Validates the SectionOutput invariants (count, pairwise separation and
// separation from the configuration) and throws NumericError on violation.
SectionOutput make_section_output(const Configuration& config,
                                  std::vector<ProjectivePoint> new_points, int m,
                                  std::string method, std::string params, double tol_sep);

// The n = 3 section: m = 2a + 3b + 6c fibers of the unordered cross-ratio,
// with lambda_1 a primitive sixth root of unity when a = 1 and lambda_2 = -1
// when b = 1.  Feasible iff m mod 3 is 0 or 2.
SectionOutput section_three(const Configuration& config, int m, const Tolerances& tol = {});

// Uniform-on-the-sphere point and well-separated configuration samplers;
// deterministic in the generator state.
ProjectivePoint random_point(std::mt19937_64& rng);
Configuration random_configuration(std::mt19937_64& rng, int n, double min_sep = 1e-2);
MobiusMap random_mobius(std::mt19937_64& rng);

}  // namespace confsect::mobius
