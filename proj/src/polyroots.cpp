#include "confsect/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace confsect::roots {

Poly poly_from(std::initializer_list<std::complex<double>> coeffs) {
  Poly p;
  for (const auto& c : coeffs) p.emplace_back(c.real(), c.imag());
  return p;
}

int degree(const Poly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == LComplex(0)) --d;
  return d;
}

Poly multiply(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1, LComplex(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly add(const Poly& p, const Poly& q) {
  Poly r(std::max(p.size(), q.size()), LComplex(0));
  for (size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  return r;
}

Poly subtract(const Poly& p, const Poly& q) {
  Poly r(std::max(p.size(), q.size()), LComplex(0));
  for (size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
  return r;
}

Poly scale(const Poly& p, LComplex s) {
  Poly r = p;
  for (auto& c : r) c *= s;
  return r;
}

LComplex evaluate(const Poly& p, LComplex x) {
  LComplex acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long double>(i);
  return r;
}

namespace {

long double coefficient_bound(const Poly& p, long double absx) {
  long double acc = 0, pw = 1;
  for (const LComplex& c : p) {
    acc += std::abs(c) * pw;
    pw *= absx;
  }
  return acc;
}

}  // namespace

RootReport find_roots(const Poly& input, double residual_tol) {
  Poly p = input;
  int d = degree(p);
  if (d < 0) throw NumericError("find_roots: zero polynomial");
  p.resize(static_cast<size_t>(d) + 1);

  RootReport report;
  // Exact zero roots come off first.
  while (!p.empty() && p.front() == LComplex(0)) {
    report.roots.emplace_back(0.0, 0.0);
    p.erase(p.begin());
    --d;
  }
  if (d == 0) return report;

  long double maxc = 0;
  for (const LComplex& c : p) maxc = std::max(maxc, std::abs(c));
  for (LComplex& c : p) c /= maxc;
  const Poly dp = derivative(p);

  // Circle start: geometric-mean radius with an angular offset that breaks
  // the symmetry of real and even polynomials.
  const long double lead = std::abs(p.back());
  const long double tail = std::abs(p.front());
  long double radius = std::pow(tail / lead, 1.0L / d);
  const long double cauchy = 1 + coefficient_bound(p, 1) / lead;
  radius = std::min(std::max(radius, 1e-3L), cauchy);
  std::vector<LComplex> z(d);
  for (int j = 0; j < d; ++j) {
    const long double th = 2 * M_PI * j / d + 0.39996L;
    z[j] = radius * LComplex(std::cos(th), std::sin(th));
  }

  // Aberth-Ehrlich sweeps.
  const int max_sweeps = 400;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    long double worst = 0;
    for (int j = 0; j < d; ++j) {
      const LComplex pj = evaluate(p, z[j]);
      if (std::abs(pj) == 0.0L) continue;
      const LComplex dj = evaluate(dp, z[j]);
      LComplex newton = dj == LComplex(0) ? LComplex(1e-12L) : pj / dj;
      LComplex rep(0);
      for (int k = 0; k < d; ++k)
        if (k != j) rep += LComplex(1) / (z[j] - z[k]);
      const LComplex denom = LComplex(1) - newton * rep;
      const LComplex step = denom == LComplex(0) ? newton : newton / denom;
      z[j] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[j])));
    }
    if (worst < 1e-18L) break;
  }

  // Newton polish, then certify.
  for (int j = 0; j < d; ++j) {
    for (int it = 0; it < 4; ++it) {
      const LComplex pj = evaluate(p, z[j]);
      const LComplex dj = evaluate(dp, z[j]);
      if (dj == LComplex(0)) break;
      const LComplex step = pj / dj;
      if (std::abs(step) > 0.1L * (1 + std::abs(z[j]))) break;  // keep basin
      z[j] -= step;
    }
    const long double bound = coefficient_bound(p, std::abs(z[j]));
    const long double res = std::abs(evaluate(p, z[j])) / std::max(bound, 1e-30L);
    report.max_relative_residual =
        std::max(report.max_relative_residual, static_cast<double>(res));
    report.roots.emplace_back(static_cast<double>(z[j].real()),
                              static_cast<double>(z[j].imag()));
  }
  if (report.max_relative_residual > residual_tol)
    throw NumericError("find_roots: residual " + std::to_string(report.max_relative_residual) +
                       " above tolerance");
  return report;
}

}  // namespace confsect::roots
