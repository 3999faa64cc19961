#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confsect/polyroots.hpp"

using namespace confsect;
using namespace confsect::roots;

namespace {

Poly from_roots(const std::vector<LComplex>& rs) {
  Poly p = {LComplex(1)};
  for (const LComplex& r : rs) p = multiply(p, Poly{-r, LComplex(1)});
  return p;
}

bool roots_match(const std::vector<std::complex<double>>& found,
                 const std::vector<LComplex>& expected, double tol) {
  if (found.size() != expected.size()) return false;
  std::vector<char> used(expected.size(), 0);
  for (const auto& f : found) {
    bool ok = false;
    for (size_t j = 0; j < expected.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(LComplex(f.real(), f.imag()) - expected[j]) <= tol) {
        used[j] = 1;
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Poly p = poly_from({1.0, 2.0});        // 1 + 2x
  const Poly q = poly_from({-1.0, 0.0, 3.0});  // -1 + 3x^2
  const Poly prod = multiply(p, q);
  CHECK(degree(prod) == 3);
  CHECK(std::abs(evaluate(prod, LComplex(2)) -
                 evaluate(p, LComplex(2)) * evaluate(q, LComplex(2))) < 1e-15L);
  CHECK(degree(subtract(p, p)) == -1);
  CHECK(degree(derivative(q)) == 1);
}

TEST_CASE("recovers prescribed roots") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 40; ++it) {
    const int d = 2 + static_cast<int>(rng() % 18);
    std::vector<LComplex> rs;
    for (int j = 0; j < d; ++j) rs.emplace_back(u(rng), u(rng));
    const RootReport rep = find_roots(from_roots(rs));
    CHECK(roots_match(rep.roots, rs, 1e-6));
    CHECK(rep.max_relative_residual < 1e-10);
  }
}

TEST_CASE("quartic in x^2 with surd roots") {
  // x^6 - 5x^4 - 5x^2 + 1 factors through u^3 - 5u^2 - 5u + 1 = (u+1)(u^2-6u+1),
  // so the roots are +-i, +-(1+sqrt 2), +-(sqrt 2 - 1).
  const Poly p = poly_from({1.0, 0.0, -5.0, 0.0, -5.0, 0.0, 1.0});
  const long double s = std::sqrt(2.0L);
  const std::vector<LComplex> expected = {
      LComplex(0, 1), LComplex(0, -1),  LComplex(1 + s, 0),
      LComplex(-1 - s, 0), LComplex(s - 1, 0), LComplex(1 - s, 0)};
  CHECK(roots_match(find_roots(p).roots, expected, 1e-9));
}

TEST_CASE("roots of unity at degree forty") {
  Poly p(41, LComplex(0));
  p[0] = -1;
  p[40] = 1;
  std::vector<LComplex> expected;
  for (int j = 0; j < 40; ++j)
    expected.push_back(std::polar(1.0L, 2.0L * static_cast<long double>(M_PI) * j / 40));
  CHECK(roots_match(find_roots(p).roots, expected, 1e-8));
}

TEST_CASE("zero roots split off exactly") {
  // x^2 (x - 1)
  const Poly p = poly_from({0.0, 0.0, -1.0, 1.0});
  const RootReport rep = find_roots(p);
  CHECK(roots_match(rep.roots, {LComplex(0), LComplex(0), LComplex(1)}, 1e-9));
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(find_roots(Poly{}), NumericError);
  CHECK_THROWS_AS(find_roots(Poly{LComplex(0)}), NumericError);
  CHECK(find_roots(Poly{LComplex(5)}).roots.empty());  // nonzero constant
  CHECK(find_roots(poly_from({1.0, 1.0})).roots.size() == 1);
}
