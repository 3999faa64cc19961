#include "confsect/mobius.hpp"

#include <algorithm>
#include <cmath>

namespace confsect::mobius {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm2(const ProjectivePoint& p) { return std::norm(p.a()) + std::norm(p.b()); }

}  // namespace

ProjectivePoint::ProjectivePoint(Complex a, Complex b) : a_(a), b_(b) {
  if (!finite(a) || !finite(b)) throw NumericError("ProjectivePoint: non-finite coordinates");
  if (a == 0.0 && b == 0.0) throw NumericError("ProjectivePoint: [0 : 0] is not a point");
  if (std::abs(a_) >= std::abs(b_)) {
    b_ /= a_;
    a_ = 1.0;
  } else {
    a_ /= b_;
    b_ = 1.0;
  }
}

Complex bracket(const ProjectivePoint& p, const ProjectivePoint& q) {
  return p.a() * q.b() - q.a() * p.b();
}

double chordal_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::abs(bracket(p, q)) / std::sqrt(norm2(p) * norm2(q));
}

bool approx_equal(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
  return chordal_distance(p, q) <= tol;
}

MobiusMap::MobiusMap(Complex alpha, Complex beta, Complex gamma, Complex delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  const Complex det = alpha_ * delta_ - beta_ * gamma_;
  if (!finite(det) || det == 0.0) throw NumericError("MobiusMap: singular matrix");
  const Complex s = std::sqrt(det);
  alpha_ /= s;
  beta_ /= s;
  gamma_ /= s;
  delta_ /= s;
}

ProjectivePoint MobiusMap::apply(const ProjectivePoint& p) const {
  return ProjectivePoint(alpha_ * p.a() + beta_ * p.b(), gamma_ * p.a() + delta_ * p.b());
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(delta_, -beta_, -gamma_, alpha_); }

MobiusMap MobiusMap::compose(const MobiusMap& m1, const MobiusMap& m2) {
  return MobiusMap(m1.alpha_ * m2.alpha_ + m1.beta_ * m2.gamma_,
                   m1.alpha_ * m2.beta_ + m1.beta_ * m2.delta_,
                   m1.gamma_ * m2.alpha_ + m1.delta_ * m2.gamma_,
                   m1.gamma_ * m2.beta_ + m1.delta_ * m2.delta_);
}

MobiusMap mobius_from_triple(const ProjectivePoint& z1, const ProjectivePoint& z2,
                             const ProjectivePoint& z3) {
  const Complex b23 = bracket(z2, z3);
  const Complex b21 = bracket(z2, z1);
  const Complex b13 = bracket(z1, z3);
  if (b23 == 0.0 || b21 == 0.0 || b13 == 0.0)
    throw NumericError("mobius_from_triple: coincident points");
  // Row form of p -> [ [p,z1] [z2,z3] : [p,z3] [z2,z1] ].
  return MobiusMap(b23 * z1.b(), -b23 * z1.a(), b21 * z3.b(), -b21 * z3.a());
}

ProjectivePoint cross_ratio(const ProjectivePoint& z1, const ProjectivePoint& z2,
                            const ProjectivePoint& z3, const ProjectivePoint& z4) {
  if (bracket(z2, z3) == 0.0 || bracket(z2, z1) == 0.0 || bracket(z1, z3) == 0.0)
    throw NumericError("cross_ratio: first three points must be pairwise distinct");
  return ProjectivePoint(bracket(z4, z1) * bracket(z2, z3), bracket(z4, z3) * bracket(z2, z1));
}

std::vector<ProjectivePoint> d3_orbit(const ProjectivePoint& lambda, double tol) {
  const Complex a = lambda.a(), b = lambda.b();
  const ProjectivePoint candidates[6] = {
      ProjectivePoint(a, b),     ProjectivePoint(b, a),     ProjectivePoint(b - a, b),
      ProjectivePoint(b, b - a), ProjectivePoint(a - b, a), ProjectivePoint(a, a - b)};
  std::vector<ProjectivePoint> orbit;
  for (const ProjectivePoint& c : candidates) {
    bool fresh = true;
    for (const ProjectivePoint& seen : orbit) fresh = fresh && !approx_equal(c, seen, tol);
    if (fresh) orbit.push_back(c);
  }
  return orbit;
}

std::vector<ProjectivePoint> cross_fiber(const ProjectivePoint& z1, const ProjectivePoint& z2,
                                         const ProjectivePoint& z3,
                                         const ProjectivePoint& lambda, const Tolerances& tol) {
  for (const ProjectivePoint& bad :
       {ProjectivePoint::from_complex(0.0), ProjectivePoint::from_complex(1.0),
        ProjectivePoint::infinity()})
    if (approx_equal(lambda, bad, tol.eval))
      throw NumericError("cross_fiber: lambda in {0, 1, inf} meets the configuration");
  const MobiusMap minv = mobius_from_triple(z1, z2, z3).inverse();
  std::vector<ProjectivePoint> out;
  for (const ProjectivePoint& mu : d3_orbit(lambda, tol.eval)) out.push_back(minv.apply(mu));
  return out;
}

Configuration::Configuration(std::vector<ProjectivePoint> points, double tol_sep)
    : points_(std::move(points)), separation_(2.0) {
  if (points_.empty()) throw NumericError("Configuration: needs at least one point");
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      separation_ = std::min(separation_, chordal_distance(points_[i], points_[j]));
  if (points_.size() == 1) separation_ = 1.0;
  if (separation_ <= tol_sep)
    throw NumericError("Configuration: separation " + std::to_string(separation_) +
                       " below tolerance");
}

Configuration Configuration::transformed(const MobiusMap& m) const {
  std::vector<ProjectivePoint> pts;
  pts.reserve(points_.size());
  for (const ProjectivePoint& p : points_) pts.push_back(m.apply(p));
  return Configuration(std::move(pts), 0.0);
}

SectionOutput make_section_output(const Configuration& config,
                                  std::vector<ProjectivePoint> new_points, int m,
                                  std::string method, std::string params, double tol_sep) {
  if (static_cast<int>(new_points.size()) != m)
    throw NumericError("section output: produced " + std::to_string(new_points.size()) +
                       " points, expected " + std::to_string(m));
  for (size_t i = 0; i < new_points.size(); ++i) {
    for (size_t j = i + 1; j < new_points.size(); ++j)
      if (chordal_distance(new_points[i], new_points[j]) <= tol_sep)
        throw NumericError("section output: new points collide");
    for (const ProjectivePoint& old : config.points())
      if (chordal_distance(new_points[i], old) <= tol_sep)
        throw NumericError("section output: new point meets the configuration");
  }
  SectionOutput out;
  out.new_points = std::move(new_points);
  out.m = m;
  out.method = std::move(method);
  out.params = std::move(params);
  return out;
}

SectionOutput section_three(const Configuration& config, int m, const Tolerances& tol) {
  if (config.n() != 3) throw Error("section_three: needs exactly three points");
  if (m < 0 || m % 3 == 1)
    throw InfeasibleError("section_three: m = " + std::to_string(m) +
                          " is not congruent to 0 or 2 mod 3");

  // Unique decomposition m = 2a + 3b + 6c with a, b in {0, 1}.
  const int a = m % 3 == 2 ? 1 : 0;
  const int rest = (m - 2 * a) / 3;
  const int b = rest % 2;
  const int c = (rest - b) / 2;

  std::vector<ProjectivePoint> lambdas;
  if (a) lambdas.push_back(ProjectivePoint::from_complex(std::polar(1.0, M_PI / 3.0)));
  if (b) lambdas.push_back(ProjectivePoint::from_complex(-1.0));

  // Generic orbits: integer candidates, skipping any whose orbit is small or
  // touches an orbit already chosen.
  std::vector<ProjectivePoint> taken;
  for (const ProjectivePoint& l : lambdas)
    for (const ProjectivePoint& p : d3_orbit(l, tol.eval)) taken.push_back(p);
  for (int candidate = 3; static_cast<int>(lambdas.size()) < a + b + c; ++candidate) {
    const ProjectivePoint l = ProjectivePoint::from_complex(candidate);
    const std::vector<ProjectivePoint> orbit = d3_orbit(l, tol.eval);
    if (orbit.size() != 6) continue;
    bool fresh = true;
    for (const ProjectivePoint& p : orbit)
      for (const ProjectivePoint& q : taken) fresh = fresh && !approx_equal(p, q, tol.sep);
    if (!fresh) continue;
    lambdas.push_back(l);
    taken.insert(taken.end(), orbit.begin(), orbit.end());
  }

  std::vector<ProjectivePoint> pts;
  std::string params = "lambdas=";
  const auto& z = config.points();
  for (const ProjectivePoint& l : lambdas) {
    for (const ProjectivePoint& p : cross_fiber(z[0], z[1], z[2], l, tol)) pts.push_back(p);
    params += std::to_string(l.value().real()) + "+" + std::to_string(l.value().imag()) + "i;";
  }
  return make_section_output(config, std::move(pts), m, "cross-ratio", params, tol.sep);
}

ProjectivePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double x = g(rng), y = g(rng), z = g(rng);
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r == 0.0) return ProjectivePoint::from_complex(0.0);
  x /= r;
  y /= r;
  z /= r;
  // Stereographic projection; the north pole is plain infinity.
  return ProjectivePoint(Complex(x, y), Complex(1.0 - z, 0.0));
}

Configuration random_configuration(std::mt19937_64& rng, int n, double min_sep) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ProjectivePoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
    try {
      return Configuration(std::move(pts), min_sep);
    } catch (const NumericError&) {
      continue;
    }
  }
  throw NumericError("random_configuration: could not reach requested separation");
}

MobiusMap random_mobius(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng)), c(g(rng), g(rng)), d(g(rng), g(rng));
    if (std::abs(a * d - b * c) < 0.3) continue;
    return MobiusMap(a, b, c, d);
  }
}

}  // namespace confsect::mobius
