#include "confsect/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace confsect::monodromy {

using mobius::chordal_distance;
using mobius::Complex;

ConfigPath constant_path(const Configuration& config) {
  ConfigPath p;
  p.n = config.n();
  p.closed = true;
  p.at = [pts = config.points()](double) { return pts; };
  return p;
}

ConfigPath generator_loop(int n, int i, const Configuration& basepoint) {
  if (basepoint.n() != n) throw Error("generator_loop: basepoint has wrong point count");
  if (i < 1 || i > n - 1) throw Error("generator_loop: index out of range");
  const std::vector<ProjectivePoint>& pts = basepoint.points();
  if (pts[i - 1].is_infinity() || pts[i].is_infinity())
    throw NumericError("generator_loop: the exchanged points must be finite");

  const Complex zi = pts[i - 1].value();
  const Complex zj = pts[i].value();
  const Complex mid = (zi + zj) / 2.0;

  ConfigPath p;
  p.n = n;
  p.closed = true;
  // Endpoints return the basepoint tuple bitwise: induced permutations from
  // different loops at one basepoint must share the indexing of the section
  // output there, and a rounding-level wobble can reorder it.
  p.at = [pts, zi, zj, mid, i](double t) {
    std::vector<ProjectivePoint> out = pts;
    if (t <= 0.0) return out;
    if (t >= 1.0) {
      std::swap(out[i - 1], out[i]);
      return out;
    }
    const Complex rot = std::polar(1.0, M_PI * t);  // counterclockwise half-turn
    out[i - 1] = ProjectivePoint::from_complex(mid + rot * (zi - mid));
    out[i] = ProjectivePoint::from_complex(mid + rot * (zj - mid));
    return out;
  };
  return p;
}

ConfigPath concatenate(const ConfigPath& p, const ConfigPath& q) {
  if (p.n != q.n) throw Error("concatenate: strand counts differ");
  ConfigPath r;
  r.n = p.n;
  r.closed = p.closed && q.closed;
  r.at = [p, q](double t) { return t <= 0.5 ? p.at(2.0 * t) : q.at(2.0 * t - 1.0); };
  return r;
}

ConfigPath reversed(const ConfigPath& p) {
  ConfigPath r = p;
  r.at = [p](double t) { return p.at(1.0 - t); };
  return r;
}

namespace {

struct Matching {
  bool certified = false;
  std::vector<int> to;  // previous index j -> new index to[j]
  double max_gap = 0.0;
  double min_gap = 2.0;
};

Matching match_points(const std::vector<ProjectivePoint>& prev,
                      const std::vector<ProjectivePoint>& next) {
  const size_t m = prev.size();
  Matching result;
  if (next.size() != m) return result;
  result.to.assign(m, -1);
  std::vector<char> used(m, 0);
  for (size_t j = 0; j < m; ++j) {
    double best = 3.0;
    int arg = -1;
    for (size_t k = 0; k < m; ++k) {
      const double dist = chordal_distance(prev[j], next[k]);
      if (dist < best) {
        best = dist;
        arg = static_cast<int>(k);
      }
    }
    if (arg < 0 || used[arg]) return result;  // not a bijection
    used[arg] = 1;
    result.to[j] = arg;
    result.max_gap = std::max(result.max_gap, best);
  }
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      result.min_gap = std::min(result.min_gap, chordal_distance(next[a], next[b]));
  // No-swap margin with headroom: the guaranteed condition is min spacing
  // above twice the matching gap, but accepting steps that close to the
  // limit lets a fast cluster rotation alias by a whole slot between
  // samples, so steps are only taken well inside the margin.
  result.certified = m <= 1 || result.min_gap > 4.0 * result.max_gap;
  return result;
}

}  // namespace

TrackingResult track(const SectionFn& section, const ConfigPath& path,
                     const TrackOptions& opts) {
  const auto config_at = [&](double t) {
    return Configuration(path.at(t), opts.tol_sep);  // throws on separation violation
  };

  const std::vector<ProjectivePoint> initial = section(config_at(0.0)).new_points;
  std::vector<ProjectivePoint> cur = initial;

  const auto reorder = [](const std::vector<ProjectivePoint>& pts, const Matching& m) {
    std::vector<ProjectivePoint> out(pts.size(), ProjectivePoint());
    for (size_t j = 0; j < pts.size(); ++j) out[j] = pts[m.to[j]];
    return out;
  };

  // Walks cur -> config(t1) through the given interior sample fractions,
  // composing certified matchings; returns the composite or nothing.
  const auto walk = [&](const std::vector<ProjectivePoint>& from, double t0, double t1,
                        const std::vector<ProjectivePoint>& next,
                        std::initializer_list<double> fractions,
                        Matching& out) -> bool {
    // Reordering after each stage keeps entry j following the point that
    // occupied slot j of `from`, so the final matching is the composite.
    std::vector<ProjectivePoint> pts = from;
    double max_gap = 0.0, min_gap = 2.0;
    for (double f : fractions) {
      const std::vector<ProjectivePoint> stage =
          section(config_at(t0 + f * (t1 - t0))).new_points;
      const Matching m = match_points(pts, stage);
      if (!m.certified) return false;
      pts = reorder(stage, m);
      max_gap = std::max(max_gap, m.max_gap);
      min_gap = std::min(min_gap, m.min_gap);
    }
    const Matching last = match_points(pts, next);
    if (!last.certified) return false;
    out.certified = true;
    out.to = last.to;
    out.max_gap = std::max(max_gap, last.max_gap);
    out.min_gap = std::min(min_gap, last.min_gap);
    return true;
  };

  TrackingResult result;
  double t = 0.0;
  double dt = 1.0 / opts.initial_steps;
  while (t < 1.0) {
    const double target = std::min(1.0, t + dt);
    // A certified margin alone cannot see a correspondence that aliases
    // between samples (a cluster fan turning a whole slot looks like a small
    // displacement).  Each step is validated by rewalking it through halves
    // and thirds: all three subdivisions must produce the same bijection.
    const std::vector<ProjectivePoint> next = section(config_at(target)).new_points;
    const Matching direct = match_points(cur, next);
    bool ok = direct.certified;
    Matching halves, thirds;
    ok = ok && walk(cur, t, target, next, {0.5}, halves) && halves.to == direct.to;
    ok = ok && walk(cur, t, target, next, {1.0 / 3.0, 2.0 / 3.0}, thirds) &&
         thirds.to == direct.to;
    if (!ok) {
      dt /= 2.0;
      if (dt < opts.step_floor)
        throw NumericError("track: step floor reached without a certified matching");
      continue;
    }
    cur = reorder(next, direct);
    result.max_matching_gap = std::max(result.max_matching_gap, direct.max_gap);
    result.min_interpoint_gap = std::min(result.min_interpoint_gap, direct.min_gap);
    ++result.steps;
    t = target;
  }

  if (path.closed) {
    const Matching final = match_points(cur, initial);
    if (!final.certified)
      throw NumericError("track: could not certify the final-to-initial matching");
    if (final.max_gap > opts.closure_tol)
      throw NumericError("track: closure mismatch " + std::to_string(final.max_gap) +
                         " above tolerance");
    result.closure_mismatch = final.max_gap;
    result.induced = braid::Permutation(final.to);
  } else {
    result.induced = braid::Permutation::identity(static_cast<int>(cur.size()));
  }
  return result;
}

std::vector<braid::Permutation> induced_permutation_table(const SectionFn& section,
                                                          const Configuration& basepoint,
                                                          const TrackOptions& opts) {
  std::vector<braid::Permutation> table;
  for (int i = 1; i <= basepoint.n() - 1; ++i)
    table.push_back(track(section, generator_loop(basepoint.n(), i, basepoint), opts).induced);
  return table;
}

bool braid_relation_consistent(const SectionFn& section, const Configuration& basepoint,
                               int i, const TrackOptions& opts) {
  const int n = basepoint.n();
  const ConfigPath si = generator_loop(n, i, basepoint);
  const ConfigPath sj = generator_loop(n, i + 1, basepoint);
  const ConfigPath lhs = concatenate(concatenate(si, sj), si);
  const ConfigPath rhs = concatenate(concatenate(sj, si), sj);
  return track(section, lhs, opts).induced == track(section, rhs, opts).induced;
}

Configuration roots_of_unity_basepoint(int n) {
  std::vector<ProjectivePoint> pts;
  for (int j = 0; j < n; ++j)
    pts.push_back(ProjectivePoint::from_complex(std::polar(1.0, 2.0 * M_PI * j / n)));
  return Configuration(std::move(pts));
}

}  // namespace confsect::monodromy
