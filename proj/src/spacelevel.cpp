#include "confsect/spacelevel.hpp"

#include <algorithm>
#include <cmath>

#include "confsect/errors.hpp"

namespace confsect::spacelevel {

namespace {

using mobius::bracket;
using mobius::chordal_distance;
using mobius::MobiusMap;

// SU(2) rotation taking p to 0; a chordal isometry.
MobiusMap chart_to_zero(const ProjectivePoint& p) {
  return MobiusMap(p.b(), -p.a(), std::conj(p.a()), std::conj(p.b()));
}

struct ClusterGeometry {
  MobiusMap chart;                      // z_i -> 0
  std::vector<ProjectivePoint> others;  // chart images of z_a, a != i
  int degree = 0;                       // (n-1)(n-2)
  Complex log_c;                        // log of lim u^d R(u) in the chart
  double log_corr = 0.0;                // log prod_a (1 + r |b_a| / |a_a|)^(n-2)
};

ClusterGeometry cluster_geometry(const std::vector<ProjectivePoint>& pts, int i,
                                 double radius) {
  const int n = static_cast<int>(pts.size());
  ClusterGeometry g;
  g.degree = (n - 1) * (n - 2);
  g.chart = chart_to_zero(pts[i - 1]);
  for (int a = 1; a <= n; ++a)
    if (a != i) g.others.push_back(g.chart.apply(pts[a - 1]));

  // log C = sum over ordered pairs (a, b) of log a_b - log(a_b b_a - a_a b_b);
  // log c_i = log C + (n-2) sum_a log(-a_a).
  Complex log_c(0.0);
  for (size_t a = 0; a < g.others.size(); ++a) {
    for (size_t b = 0; b < g.others.size(); ++b) {
      if (a == b) continue;
      log_c += std::log(g.others[b].a());
      log_c -= std::log(bracket(g.others[b], g.others[a]));
    }
    log_c += static_cast<double>(n - 2) * std::log(-g.others[a].a());
  }
  g.log_c = log_c;

  double log_corr = 0.0;
  for (const ProjectivePoint& za : g.others)
    log_corr += (n - 2) * std::log1p(radius * std::abs(za.b()) / std::abs(za.a()));
  g.log_corr = log_corr;
  return g;
}

double cluster_budget(const Configuration& config, const Options& opts) {
  return std::min(opts.cluster_radius, config.separation() / 3.0);
}

// Newton in the chart on F(u) = log(R(u) / eps).
std::vector<Complex> solve_cluster(const ClusterGeometry& g, Complex log_eps, double radius,
                                   const Options& opts) {
  const int d = g.degree;
  const int nm2_count = static_cast<int>(g.others.size());
  const auto log_r = [&](Complex u) {
    Complex acc = g.log_c;
    for (const ProjectivePoint& za : g.others)
      acc += static_cast<double>(d / nm2_count) *
             (std::log(u * za.b() - za.a()) - std::log(-za.a()));
    acc -= static_cast<double>(d) * std::log(u);
    return acc;
  };
  const auto log_r_prime = [&](Complex u) {
    Complex acc(0.0);
    for (const ProjectivePoint& za : g.others)
      acc += static_cast<double>(d / nm2_count) * za.b() / (u * za.b() - za.a());
    acc -= static_cast<double>(d) / u;
    return acc;
  };

  const Complex base = std::exp((g.log_c - log_eps) / static_cast<double>(d));
  std::vector<Complex> roots;
  for (int j = 0; j < d; ++j) {
    Complex u = base * std::polar(1.0, 2.0 * M_PI * j / d);
    bool converged = false;
    for (int it = 0; it < opts.max_newton; ++it) {
      Complex delta = log_r(u) - log_eps;
      // Re-principalize the phase so F is the log nearest to zero.
      delta = Complex(delta.real(), std::remainder(delta.imag(), 2.0 * M_PI));
      if (std::abs(delta) < opts.residual_tol) {
        converged = true;
        break;
      }
      const Complex lp = log_r_prime(u);
      if (lp == Complex(0.0)) break;
      Complex step = delta / lp;
      const double cap = 0.5 * std::abs(u);
      if (std::abs(step) > cap) step *= cap / std::abs(step);
      u -= step;
    }
    if (!converged)
      throw NumericError("spacelevel: cluster Newton failed to certify a preimage; "
                         "a larger scale_k may help");
    if (std::abs(u) > radius * 1.0001)
      throw NumericError("spacelevel: preimage escaped its cluster ball; "
                         "a larger scale_k may help");
    roots.push_back(u);
  }
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a + 1; b < roots.size(); ++b)
      if (std::abs(roots[a] - roots[b]) < 1e-3 * std::abs(base))
        throw NumericError("spacelevel: preimages collided inside a cluster; "
                           "a larger scale_k may help");
  return roots;
}

std::vector<Complex> poly_times_linear(const std::vector<Complex>& p, Complex c0, Complex c1) {
  std::vector<Complex> out(p.size() + 1, Complex(0.0));
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * c0;
    out[i + 1] += p[i] * c1;
  }
  return out;
}

}  // namespace

RationalMap build_rational_map(const Configuration& config, int i) {
  const int n = config.n();
  if (n < 4) throw Error("build_rational_map: needs at least four points");
  if (i < 1 || i > n) throw Error("build_rational_map: index out of range");

  RationalMap map;
  map.base_index = i;
  map.degree = (n - 1) * (n - 2);
  map.points = config.points();

  const ProjectivePoint& zi = map.points[i - 1];
  std::vector<Complex> num = {Complex(1.0)};
  std::vector<Complex> den = {Complex(1.0)};
  for (int a = 1; a <= n; ++a) {
    if (a == i) continue;
    const ProjectivePoint& za = map.points[a - 1];
    for (int b = 1; b <= n; ++b) {
      if (b == i || b == a) continue;
      const ProjectivePoint& zb = map.points[b - 1];
      // M_{z_a, z_b, z_i}(w) = [w, z_a][z_b, z_i] / ([w, z_i][z_b, z_a]).
      num = poly_times_linear(num, -za.a() * bracket(zb, zi), za.b() * bracket(zb, zi));
      den = poly_times_linear(den, -zi.a() * bracket(zb, za), zi.b() * bracket(zb, za));
    }
  }
  map.numerator = std::move(num);
  map.denominator = std::move(den);
  return map;
}

ProjectivePoint evaluate_map(const RationalMap& map, const ProjectivePoint& w) {
  const int n = static_cast<int>(map.points.size());
  const ProjectivePoint& zi = map.points[map.base_index - 1];
  Complex num(1.0), den(1.0);
  for (int a = 1; a <= n; ++a) {
    if (a == map.base_index) continue;
    const ProjectivePoint& za = map.points[a - 1];
    for (int b = 1; b <= n; ++b) {
      if (b == map.base_index || b == a) continue;
      const ProjectivePoint& zb = map.points[b - 1];
      num *= bracket(w, za) * bracket(zb, zi);
      den *= bracket(w, zi) * bracket(zb, za);
      const double m = std::max(std::abs(num), std::abs(den));
      if (m > 1e100 || (m < 1e-100 && m > 0)) {
        num /= m;
        den /= m;
      }
    }
  }
  return ProjectivePoint(num, den);
}

ProjectivePoint evaluate_map_coefficients(const RationalMap& map, const ProjectivePoint& w) {
  const size_t len = std::max(map.numerator.size(), map.denominator.size());
  Complex num(0.0), den(0.0);
  // Homogenized Horner in [a : b]: sum c_j a^j b^(len-1-j).
  Complex pa(1.0);
  std::vector<Complex> apow(len), bpow(len);
  for (size_t j = 0; j < len; ++j) {
    apow[j] = pa;
    pa *= w.a();
  }
  Complex pb(1.0);
  for (size_t j = len; j-- > 0;) {
    bpow[j] = pb;
    pb *= w.b();
  }
  for (size_t j = 0; j < len; ++j) {
    if (j < map.numerator.size()) num += map.numerator[j] * apow[j] * bpow[j];
    if (j < map.denominator.size()) den += map.denominator[j] * apow[j] * bpow[j];
  }
  return ProjectivePoint(num, den);
}

Complex level_value(const Configuration& config, int level, const Options& opts) {
  if (level < 1) throw Error("level_value: level index starts at 1");
  const int n = config.n();
  if (n < 4) throw Error("level_value: needs at least four points");
  const int d = (n - 1) * (n - 2);
  const double radius = cluster_budget(config, opts);

  double max_chord = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      max_chord = std::max(max_chord, chordal_distance(config.points()[a], config.points()[b]));
  const double log_rho = n * (std::log(max_chord) - std::log(config.separation()));

  double worst = -1e300;
  for (int i = 1; i <= n; ++i) {
    const ClusterGeometry g = cluster_geometry(config.points(), i, radius);
    worst = std::max(worst, g.log_c.real() + g.log_corr);
  }
  // log |eps| = log K + log rho + log(1 + 2 e^(worst - d log r)).
  const double excess = std::log(2.0) + worst - d * std::log(radius);
  double log_mod = std::log(opts.scale_k) + log_rho;
  log_mod += excess > 30.0 ? excess : std::log1p(std::exp(excess));
  log_mod += std::log(2.0) * ((level - 1) / 64);
  if (log_mod > 690.0)
    throw NumericError("level_value: level modulus exceeds double range; "
                       "the configuration is too ill-conditioned");
  return std::polar(std::exp(log_mod), 2.0 * M_PI * ((level - 1) % 64) / 64.0);
}

SectionOutput section_general(const Configuration& config, int levels, const Options& opts) {
  if (levels < 1) throw InfeasibleError("section_general: needs at least one level");
  const int n = config.n();
  if (n == 3) {
    mobius::Tolerances tol;
    tol.sep = opts.tol_sep;
    return mobius::section_three(config, 6 * levels, tol);
  }
  if (n < 4) throw Error("section_general: needs at least three points");

  const int d = (n - 1) * (n - 2);
  const double radius = cluster_budget(config, opts);
  std::vector<ProjectivePoint> pts;
  pts.reserve(static_cast<size_t>(levels) * n * d);
  for (int level = 1; level <= levels; ++level) {
    const Complex eps = level_value(config, level, opts);
    const Complex log_eps(std::log(std::abs(eps)), std::arg(eps));
    for (int i = 1; i <= n; ++i) {
      const ClusterGeometry g = cluster_geometry(config.points(), i, radius);
      const MobiusMap back = g.chart.inverse();
      for (const Complex& u : solve_cluster(g, log_eps, radius, opts))
        pts.push_back(back.apply(ProjectivePoint::from_complex(u)));
    }
  }
  return mobius::make_section_output(
      config, std::move(pts), levels * n * d, "spacelevel",
      "levels=" + std::to_string(levels) + ",K=" + std::to_string(opts.scale_k), opts.tol_sep);
}

}  // namespace confsect::spacelevel
