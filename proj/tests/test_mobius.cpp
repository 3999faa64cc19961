#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "confsect/mobius.hpp"

using namespace confsect;
using namespace confsect::mobius;

namespace {

const ProjectivePoint kZero = ProjectivePoint::from_complex(0.0);
const ProjectivePoint kOne = ProjectivePoint::from_complex(1.0);
const ProjectivePoint kInf = ProjectivePoint::infinity();

bool sets_match(const std::vector<ProjectivePoint>& a, const std::vector<ProjectivePoint>& b,
                double tol) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const ProjectivePoint& p : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && chordal_distance(p, b[j]) <= tol) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chordal distance basics") {
  CHECK(chordal_distance(kZero, kZero) == doctest::Approx(0.0));
  CHECK(chordal_distance(kZero, kInf) == doctest::Approx(1.0));
  // |1 - (-1)| / sqrt((1+1)(1+1)) = 1
  CHECK(chordal_distance(kOne, ProjectivePoint::from_complex(-1.0)) == doctest::Approx(1.0));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    const ProjectivePoint p = random_point(rng), q = random_point(rng);
    CHECK(chordal_distance(p, q) == doctest::Approx(chordal_distance(q, p)));
    CHECK(chordal_distance(p, q) <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(ProjectivePoint(0.0, 0.0), NumericError);
}

TEST_CASE("mobius from triple hits its interpolation data") {
  const MobiusMap id = mobius_from_triple(kZero, kOne, kInf);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20; ++it) {
    const ProjectivePoint p = random_point(rng);
    CHECK(chordal_distance(id.apply(p), p) < 1e-12);
  }
  // (1, 0, inf) -> w |-> 1 - w
  const MobiusMap flip = mobius_from_triple(kOne, kZero, kInf);
  CHECK(chordal_distance(flip.apply(ProjectivePoint::from_complex(0.25)),
                         ProjectivePoint::from_complex(0.75)) < 1e-12);
  CHECK(chordal_distance(flip.apply(kInf), kInf) < 1e-12);

  for (int it = 0; it < 40; ++it) {
    const Configuration c = random_configuration(rng, 3);
    const MobiusMap m = mobius_from_triple(c.points()[0], c.points()[1], c.points()[2]);
    CHECK(chordal_distance(m.apply(c.points()[0]), kZero) < 1e-10);
    CHECK(chordal_distance(m.apply(c.points()[1]), kOne) < 1e-10);
    CHECK(chordal_distance(m.apply(c.points()[2]), kInf) < 1e-10);
  }
  CHECK_THROWS_AS(mobius_from_triple(kZero, kZero, kInf), NumericError);
}

TEST_CASE("mobius maps form a group action") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const MobiusMap m1 = random_mobius(rng), m2 = random_mobius(rng);
    const ProjectivePoint p = random_point(rng);
    CHECK(chordal_distance(MobiusMap::compose(m1, m2).apply(p), m1.apply(m2.apply(p))) <
          1e-10);
    CHECK(chordal_distance(m1.inverse().apply(m1.apply(p)), p) < 1e-10);
  }
}

TEST_CASE("cross ratio values") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    const ProjectivePoint w = random_point(rng);
    CHECK(chordal_distance(cross_ratio(kZero, kOne, kInf, w), w) < 1e-12);
  }
  const ProjectivePoint cr =
      cross_ratio(kOne, ProjectivePoint::from_complex(2.0), ProjectivePoint::from_complex(3.0),
                  ProjectivePoint::from_complex(4.0));
  CHECK(chordal_distance(cr, ProjectivePoint::from_complex(-3.0)) < 1e-12);

  for (int it = 0; it < 20; ++it) {
    const Configuration c = random_configuration(rng, 3);
    CHECK(chordal_distance(cross_ratio(c.points()[0], c.points()[1], c.points()[2],
                                       c.points()[0]),
                           kZero) < 1e-10);
    // Agrees with applying the normalizing map.
    const ProjectivePoint z4 = random_point(rng);
    const MobiusMap m = mobius_from_triple(c.points()[0], c.points()[1], c.points()[2]);
    CHECK(chordal_distance(cross_ratio(c.points()[0], c.points()[1], c.points()[2], z4),
                           m.apply(z4)) < 1e-9);
  }
  CHECK_THROWS_AS(cross_ratio(kZero, kZero, kInf, kOne), NumericError);
}

TEST_CASE("cross ratio is a Mobius invariant") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const Configuration c = random_configuration(rng, 4, 5e-2);
    const MobiusMap m = random_mobius(rng);
    const auto& z = c.points();
    const ProjectivePoint before = cross_ratio(z[0], z[1], z[2], z[3]);
    const ProjectivePoint after =
        cross_ratio(m.apply(z[0]), m.apply(z[1]), m.apply(z[2]), m.apply(z[3]));
    CHECK(chordal_distance(before, after) < 1e-9);
  }
}

TEST_CASE("D3 orbits") {
  const auto orbit2 = d3_orbit(ProjectivePoint::from_complex(2.0));
  CHECK(orbit2.size() == 3);
  CHECK(sets_match(orbit2,
                   {ProjectivePoint::from_complex(2.0), ProjectivePoint::from_complex(0.5),
                    ProjectivePoint::from_complex(-1.0)},
                   1e-10));

  const Complex zeta = std::polar(1.0, M_PI / 3.0);
  const auto orbitz = d3_orbit(ProjectivePoint::from_complex(zeta));
  CHECK(orbitz.size() == 2);
  // Either primitive sixth root generates the same two-point orbit.
  CHECK(sets_match(orbitz, d3_orbit(ProjectivePoint::from_complex(std::conj(zeta))), 1e-10));

  const auto orbit5 = d3_orbit(ProjectivePoint::from_complex(5.0));
  CHECK(orbit5.size() == 6);

  // Closure: every substitution of every member stays inside.
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    const ProjectivePoint l = random_point(rng);
    const auto orbit = d3_orbit(l);
    for (const ProjectivePoint& mu : orbit)
      for (const ProjectivePoint& node : d3_orbit(mu)) {
        bool inside = false;
        for (const ProjectivePoint& q : orbit) inside = inside || approx_equal(node, q, 1e-7);
        CHECK(inside);
      }
  }
}

TEST_CASE("cross fiber") {
  const ProjectivePoint two = ProjectivePoint::from_complex(2.0);
  CHECK(sets_match(cross_fiber(kZero, kOne, kInf, two), d3_orbit(two), 1e-10));
  std::mt19937_64 rng(23);
  const Configuration c = random_configuration(rng, 3);
  const auto& z = c.points();
  CHECK(cross_fiber(z[0], z[1], z[2], two).size() == 3);

  // Invariance under all six orderings of the three base points.
  const ProjectivePoint lam = ProjectivePoint::from_complex(Complex(0.3, 1.1));
  const auto reference = cross_fiber(z[0], z[1], z[2], lam);
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  do {
    CHECK(sets_match(cross_fiber(z[perm[0]], z[perm[1]], z[perm[2]], lam), reference, 1e-8));
  } while (std::next_permutation(perm, perm + 3));

  CHECK_THROWS_AS(cross_fiber(z[0], z[1], z[2], kZero), NumericError);
  CHECK_THROWS_AS(cross_fiber(z[0], z[1], z[2], kOne), NumericError);
  CHECK_THROWS_AS(cross_fiber(z[0], z[1], z[2], kInf), NumericError);
}

TEST_CASE("three point section: counts and feasibility") {
  std::mt19937_64 rng(29);
  const Configuration c = random_configuration(rng, 3);
  CHECK(section_three(c, 0).new_points.empty());
  CHECK(section_three(c, 2).new_points.size() == 2);
  CHECK(section_three(c, 5).new_points.size() == 5);
  for (int m = 0; m <= 30; ++m) {
    if (m % 3 == 1) {
      CHECK_THROWS_AS(section_three(c, m), InfeasibleError);
    } else {
      const SectionOutput out = section_three(c, m);
      CHECK(static_cast<int>(out.new_points.size()) == m);
    }
  }
}

TEST_CASE("three point section: equivariance and label invariance") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    const Configuration c = random_configuration(rng, 3, 1e-2);
    const MobiusMap m = random_mobius(rng);
    const int target = 2 + 3 * static_cast<int>(rng() % 4);
    const SectionOutput direct = section_three(c.transformed(m), target);
    const SectionOutput moved = section_three(c, target);
    std::vector<ProjectivePoint> mapped;
    for (const ProjectivePoint& p : moved.new_points) mapped.push_back(m.apply(p));
    CHECK(sets_match(direct.new_points, mapped, 1e-9));
  }

  const Configuration c = random_configuration(rng, 3);
  const SectionOutput ref = section_three(c, 8);
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  do {
    const Configuration shuffled(
        {c.points()[perm[0]], c.points()[perm[1]], c.points()[perm[2]]});
    CHECK(sets_match(section_three(shuffled, 8).new_points, ref.new_points, 1e-9));
  } while (std::next_permutation(perm, perm + 3));
}

TEST_CASE("configuration separation certificate") {
  CHECK_THROWS_AS(Configuration({kZero, kZero, kOne}), NumericError);
  const Configuration ok({kZero, kOne, kInf});
  CHECK(ok.separation() > 0.5);
  CHECK(ok.n() == 3);
}
