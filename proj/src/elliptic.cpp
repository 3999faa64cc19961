#include "confsect/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "confsect/spacelevel.hpp"

namespace confsect::elliptic {

using mobius::ProjectivePoint;
using roots::LComplex;
using roots::Poly;

long long primitive_count(long long k) {
  if (k < 1) throw Error("primitive_count: k must be positive");
  long long result = 1;
  long long rest = k;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    long long pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    result *= pe * pe - (pe * pe) / (p * p);
  }
  if (rest > 1) result *= rest * rest - 1;
  return result;
}

namespace {

// The recurrences cancel many leading digits by index 12, enough to fuse
// close torsion roots in long double; the ladder runs in binary128.
struct QComplex {
  __float128 re = 0, im = 0;
  QComplex() = default;
  QComplex(__float128 r, __float128 i) : re(r), im(i) {}
  explicit QComplex(const LComplex& z) : re(z.real()), im(z.imag()) {}
  LComplex to_ld() const {
    return LComplex(static_cast<long double>(re), static_cast<long double>(im));
  }
};
QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator*(const QComplex& a, const QComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator/(const QComplex& a, const QComplex& b) {
  const __float128 d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

using QPoly = std::vector<QComplex>;

QPoly qmul(const QPoly& p, const QPoly& q) {
  if (p.empty() || q.empty()) return {};
  QPoly r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
  return r;
}

QPoly qsub(const QPoly& p, const QPoly& q) {
  QPoly r(std::max(p.size(), q.size()));
  for (size_t i = 0; i < p.size(); ++i) r[i] = r[i] + p[i];
  for (size_t i = 0; i < q.size(); ++i) r[i] = r[i] - q[i];
  return r;
}

QPoly qhalf(const QPoly& p) {
  QPoly r = p;
  for (QComplex& c : r) c = {c.re / 2, c.im / 2};
  return r;
}

QComplex qeval(const QPoly& p, const QComplex& x) {
  QComplex acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

QPoly qderivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i)
    r[i - 1] = p[i] * QComplex(static_cast<__float128>(i), 0);
  return r;
}

struct Ladder {
  std::vector<QPoly> P;
  QPoly W;
};

// x-parts P_k of the division polynomials for y^2 = W(x) = x^3 + A x^2 + B x:
// psi_k = P_k(x) for odd k and P_k(x) * y for even k.
Ladder xpart_ladder(const LegendreCurve& curve, int top) {
  const QComplex A(LComplex(curve.quad_coeff().real(), curve.quad_coeff().imag()));
  const QComplex B(LComplex(curve.lin_coeff().real(), curve.lin_coeff().imag()));
  const QComplex one(1, 0), zero(0, 0);

  Ladder lad;
  lad.W = {zero, B, A, one};
  const QPoly W2 = qmul(lad.W, lad.W);

  std::vector<QPoly>& P = lad.P;
  P.resize(static_cast<size_t>(std::max(top, 4)) + 1);
  P[0] = {};
  P[1] = {one};
  P[2] = {QComplex(2, 0)};
  P[3] = {zero - B * B, zero, QComplex(6, 0) * B, QComplex(4, 0) * A, QComplex(3, 0)};
  P[4] = {QComplex(-4, 0) * B * B * B,
          QComplex(-8, 0) * A * B * B,
          QComplex(-20, 0) * B * B,
          zero,
          QComplex(20, 0) * B,
          QComplex(8, 0) * A,
          QComplex(4, 0)};
  for (int j = 5; j <= top; ++j) {
    if (j % 2 == 1) {
      const int m = (j - 1) / 2;
      const QPoly t1 = qmul(P[m + 2], qmul(P[m], qmul(P[m], P[m])));
      const QPoly t2 = qmul(P[m - 1], qmul(P[m + 1], qmul(P[m + 1], P[m + 1])));
      P[j] = m % 2 == 0 ? qsub(qmul(W2, t1), t2) : qsub(t1, qmul(W2, t2));
    } else {
      const int m = j / 2;
      const QPoly t1 = qmul(P[m + 2], qmul(P[m - 1], P[m - 1]));
      const QPoly t2 = qmul(P[m - 2], qmul(P[m + 1], P[m + 1]));
      P[j] = qhalf(qmul(P[m], qsub(t1, t2)));
    }
  }
  return lad;
}

Poly downcast_ld(const QPoly& p) {
  Poly out;
  out.reserve(p.size());
  for (const QComplex& c : p) out.push_back(c.to_ld());
  return out;
}

std::vector<Complex> downcast(const Poly& p) {
  std::vector<Complex> out;
  out.reserve(p.size());
  for (const LComplex& c : p)
    out.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  return out;
}

double qabs(const QComplex& v) {
  return std::hypot(static_cast<double>(v.re), static_cast<double>(v.im));
}

// Final refinement in binary128.  The monomial coefficients of the larger
// division polynomials dwarf the values near the roots (the evaluation
// conditioning reaches ~1e26 by psi_12), so the long double stage only
// provides starting points: close roots of different torsion orders fuse
// there.  Simultaneous Aberth sweeps in binary128 pull captured twins apart
// and converge every root to full double accuracy.
std::vector<Complex> roots_of(const QPoly& p, double residual_tol) {
  // The long double stage only seeds the iteration, so its backward-error
  // gate is kept loose; the convergence of the binary128 sweeps below is the
  // certificate that matters.
  const std::vector<std::complex<double>> warm = roots::find_roots(downcast_ld(p), 2.0).roots;
  (void)residual_tol;
  const QPoly dp = qderivative(p);

  std::vector<QComplex> xs;
  xs.reserve(warm.size());
  for (const auto& r : warm) xs.push_back(QComplex{LComplex(r.real(), r.imag())});

  const int d = static_cast<int>(xs.size());
  double final_step = 0.0;
  double prev_worst = 1e300;
  int plateau = 0;
  for (int sweep = 0; sweep < 300 && d > 0; ++sweep) {
    double worst = 0.0;
    for (int j = 0; j < d; ++j) {
      const QComplex pj = qeval(p, xs[j]);
      const QComplex dj = qeval(dp, xs[j]);
      if (qabs(dj) == 0.0) continue;
      const QComplex newton = pj / dj;
      QComplex rep{0, 0};
      for (int k = 0; k < d; ++k)
        if (k != j) rep = rep + QComplex{1, 0} / (xs[j] - xs[k]);
      QComplex denom = QComplex{1, 0} - newton * rep;
      QComplex step = qabs(denom) == 0.0 ? newton : newton / denom;
      const double cap = 0.1 * (1.0 + qabs(xs[j]));
      if (qabs(step) > cap) {
        const double f = cap / qabs(step);
        step = step * QComplex{static_cast<__float128>(f), 0};
      }
      xs[j] = xs[j] - step;
      worst = std::max(worst, qabs(step) / (1.0 + qabs(xs[j])));
    }
    final_step = worst;
    if (worst < 1e-20) break;
    // Near-coincident pairs on special curves keep the collective steps
    // bouncing on the noise floor; stop once progress stalls and let the
    // Newton pass below finish.
    plateau = worst > 0.5 * prev_worst ? plateau + 1 : 0;
    prev_worst = worst;
    if (plateau >= 4 && worst < 1e-8) break;
  }
  if (final_step > 1e-14) {
    // Collective sweeps can keep oscillating once the roots are separated;
    // plain Newton settles each root onto its local noise floor.  Closer
    // gates would misfire: special curves (the lemniscatic one included)
    // carry honest sub-1e-6 root pairs whose steps stall near 1e-10 while
    // the values are already oracle-accurate.
    for (QComplex& x : xs) {
      double step = 1.0;
      for (int it = 0; it < 10 && step > 1e-20; ++it) {
        const QComplex v = qeval(p, x);
        const QComplex dv = qeval(dp, x);
        if (qabs(dv) == 0.0) break;
        const QComplex delta = v / dv;
        step = qabs(delta) / (1.0 + qabs(x));
        x = x - delta;
      }
    }
  }

  // Any surviving near-coincidence means the iteration genuinely failed.
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (qabs(xs[a] - xs[b]) <= 1e-10 * (1.0 + qabs(xs[a])))
        throw NumericError("torsion roots: refinement left a fused pair");

  std::vector<Complex> out;
  out.reserve(xs.size());
  for (const QComplex& x : xs) {
    const LComplex z = x.to_ld();
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

}  // namespace

DivisionPolynomial division_polynomial(const LegendreCurve& curve, int k) {
  if (k < 1) throw Error("division_polynomial: k must be positive");
  const Ladder lad = xpart_ladder(curve, k);
  DivisionPolynomial out;
  out.order = k;
  out.coefficients =
      downcast(downcast_ld(k % 2 == 1 ? lad.P[k] : qmul(lad.W, lad.P[k])));
  return out;
}

std::pair<LegendreCurve, MobiusMap> legendre_from_config(const Configuration& config,
                                                         double guard) {
  if (config.n() != 4) throw Error("legendre_from_config: needs exactly four points");

  // Deterministic labeling of the unordered input; the output set does not
  // depend on it.
  std::vector<ProjectivePoint> pts = config.points();
  std::sort(pts.begin(), pts.end(), [](const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.is_infinity() != q.is_infinity()) return q.is_infinity();
    if (p.is_infinity()) return false;
    const Complex a = p.value(), b = q.value();
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const MobiusMap N = mobius::mobius_from_triple(pts[0], pts[1], pts[2]);
  const ProjectivePoint lambda_pt = N.apply(pts[3]);

  const ProjectivePoint degenerate[3] = {ProjectivePoint::from_complex(0.0),
                                         ProjectivePoint::from_complex(1.0),
                                         ProjectivePoint::infinity()};
  for (const ProjectivePoint& mu : mobius::d3_orbit(lambda_pt))
    for (const ProjectivePoint& bad : degenerate)
      if (mobius::chordal_distance(mu, bad) < guard)
        throw NumericError("legendre_from_config: cross-ratio orbit within " +
                           std::to_string(guard) + " of {0, 1, inf}");

  return {LegendreCurve{lambda_pt.value()}, N};
}

std::vector<Complex> torsion_x_values(const LegendreCurve& curve, const TorsionSpec& spec,
                                      double residual_tol) {
  const double scale = 1.0 + std::abs(curve.lambda);
  const double dedup_tol = 1e-8 * scale;
  const double match_tol = 1e-9 * scale;

  std::vector<Complex> xs;
  long long expected = 0;
  if (!spec.primitive_only) {
    if (spec.k < 2) throw Error("torsion_x_values: full mode needs k >= 2");
    const int N = 2 * spec.k;
    expected = 2LL * spec.k * spec.k - 2;
    xs = roots_of(xpart_ladder(curve, N).P[N], residual_tol);
  } else {
    if (spec.k < 1) throw Error("torsion_x_values: primitive mode needs k >= 1");
    const int N = 4 * spec.k;
    expected = primitive_count(N) / 2;
    const Ladder lad = xpart_ladder(curve, N);
    // Strip the x-values shared with proper divisors.
    std::vector<Complex> others = {Complex(0.0), Complex(1.0), curve.lambda};
    for (int d = 3; d < N; ++d) {
      if (N % d) continue;
      for (const Complex& r : roots_of(lad.P[d], residual_tol)) others.push_back(r);
    }
    for (const Complex& r : roots_of(lad.P[N], residual_tol)) {
      bool lower_order = false;
      for (const Complex& o : others) lower_order = lower_order || std::abs(r - o) < match_tol;
      if (!lower_order) xs.push_back(r);
    }
  }

  std::vector<Complex> out;
  for (const Complex& x : xs) {
    bool fresh = true;
    for (const Complex& seen : out) fresh = fresh && std::abs(x - seen) >= dedup_tol;
    if (fresh) out.push_back(x);
  }
  if (static_cast<long long>(out.size()) != expected)
    throw NumericError("torsion_x_values: found " + std::to_string(out.size()) +
                       " distinct x-values, expected " + std::to_string(expected));
  return out;
}

SectionOutput section_four_torsion(const Configuration& config, const TorsionSpec& spec,
                                   const Tolerances& tol) {
  auto [curve, N] = legendre_from_config(config);
  const std::vector<Complex> xs = torsion_x_values(curve, spec);
  const MobiusMap back = N.inverse();
  std::vector<ProjectivePoint> pts;
  pts.reserve(xs.size());
  for (const Complex& x : xs) pts.push_back(back.apply(ProjectivePoint::from_complex(x)));
  const std::string params =
      "k=" + std::to_string(spec.k) + (spec.primitive_only ? ",primitive" : ",full");
  return mobius::make_section_output(config, std::move(pts), static_cast<int>(xs.size()),
                                     "elliptic-torsion", params, tol.sep);
}

SectionOutput section_four_planned(const Configuration& config, int m, const Tolerances& tol) {
  if (config.n() != 4) throw Error("section_four_planned: needs exactly four points");
  if (m == 0)
    return mobius::make_section_output(config, {}, 0, "planner", "base=0,levels=0", tol.sep);
  if (m < 0) throw InfeasibleError("section_four_planned: negative m");

  struct Direct {
    int m;
    TorsionSpec spec;
  };
  static const Direct direct[] = {{6, TorsionSpec::full(2)},       {16, TorsionSpec::full(3)},
                                  {24, TorsionSpec::primitive(2)}, {30, TorsionSpec::full(4)},
                                  {48, TorsionSpec::primitive(3)}, {70, TorsionSpec::full(6)}};
  for (const Direct& d : direct) {
    if (d.m != m) continue;
    SectionOutput out = section_four_torsion(config, d.spec, tol);
    out.method = "planner";
    out.params = "base=" + std::to_string(m) + ",levels=0";
    return out;
  }

  const int residue = m % 24;
  if (m < 70 || (residue != 0 && residue != 6 && residue != 16 && residue != 22))
    throw InfeasibleError("section_four_planned: m = " + std::to_string(m) +
                          " is not in the torsion list and not >= 70 with residue 0, 6, 16 or "
                          "22 mod 24");

  TorsionSpec base_spec = TorsionSpec::full(2);
  int base = 0;
  switch (residue) {
    case 0: base = 0; break;
    case 6: base = 6, base_spec = TorsionSpec::full(2); break;
    case 16: base = 16, base_spec = TorsionSpec::full(3); break;
    default: base = 70, base_spec = TorsionSpec::full(6); break;
  }
  const int levels = (m - base) / 24;

  // The spacelevel layers cluster tightly around the old points while the
  // torsion points stay away from them.  A torsion point can still graze a
  // cluster; raising the scale shrinks the clusters away from it, so the
  // first attempt that clears a comfortable margin wins, and the last one is
  // accepted whenever it meets the contract separation.
  SectionOutput best;
  double best_sep = -1.0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    spacelevel::Options opts;
    opts.tol_sep = tol.sep;
    opts.scale_k *= std::pow(100.0, attempt);
    try {
      std::vector<ProjectivePoint> pts;
      if (base > 0) {
        SectionOutput torsion = section_four_torsion(config, base_spec, tol);
        pts = std::move(torsion.new_points);
      }
      if (levels > 0) {
        SectionOutput layers = spacelevel::section_general(config, levels, opts);
        pts.insert(pts.end(), layers.new_points.begin(), layers.new_points.end());
      }
      SectionOutput out = mobius::make_section_output(
          config, std::move(pts), m, "planner",
          "base=" + std::to_string(base) + ",levels=" + std::to_string(levels), tol.sep);
      double sep = 2.0;
      for (size_t i = 0; i < out.new_points.size(); ++i) {
        for (size_t j = i + 1; j < out.new_points.size(); ++j)
          sep = std::min(sep, mobius::chordal_distance(out.new_points[i], out.new_points[j]));
        for (const ProjectivePoint& z : config.points())
          sep = std::min(sep, mobius::chordal_distance(out.new_points[i], z));
      }
      if (sep > 1e-3) return out;
      if (sep > best_sep) {
        best_sep = sep;
        best = std::move(out);
      }
    } catch (const NumericError&) {
      if (attempt >= 2 && best_sep < 0.0) throw;
    }
  }
  if (best_sep < 0.0)
    throw NumericError("section_four_planned: no attempt met the separation contract");
  return best;
}

CurvePoint curve_identity() { return CurvePoint{{}, {}, true}; }

Complex curve_rhs(const LegendreCurve& curve, Complex x) {
  return x * (x - 1.0) * (x - curve.lambda);
}

CurvePoint lift_x(const LegendreCurve& curve, Complex x) {
  return CurvePoint{x, std::sqrt(curve_rhs(curve, x)), false};
}

CurvePoint negate(const CurvePoint& p) { return p.infinity ? p : CurvePoint{p.x, -p.y, false}; }

CurvePoint add(const LegendreCurve& curve, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const double scale = 1.0 + std::abs(p.x) + std::abs(q.x);
  const double eps = 1e-6 * scale;
  Complex slope;
  if (std::abs(p.x - q.x) <= eps) {
    if (std::abs(p.y + q.y) <= eps) return curve_identity();  // q = -p
    if (std::abs(p.y) <= eps) return curve_identity();        // doubling 2-torsion
    const Complex A = curve.quad_coeff(), B = curve.lin_coeff();
    slope = (3.0 * p.x * p.x + 2.0 * A * p.x + B) / (2.0 * p.y);
  } else {
    slope = (q.y - p.y) / (q.x - p.x);
  }
  const Complex x3 = slope * slope - curve.quad_coeff() - p.x - q.x;
  const Complex y3 = slope * (p.x - x3) - p.y;
  return CurvePoint{x3, y3, false};
}

CurvePoint scalar_mul(const LegendreCurve& curve, long long n, const CurvePoint& p) {
  if (n < 0) return scalar_mul(curve, -n, negate(p));
  CurvePoint acc = curve_identity();
  CurvePoint base = p;
  while (n > 0) {
    if (n & 1) acc = add(curve, acc, base);
    n >>= 1;
    if (n) base = add(curve, base, base);
  }
  return acc;
}

double torsion_oracle_residual(const LegendreCurve& curve, Complex x, int n_torsion) {
  if (n_torsion < 2 || n_torsion % 2)
    throw Error("torsion_oracle_residual: torsion order must be even");
  const CurvePoint half = scalar_mul(curve, n_torsion / 2, lift_x(curve, x));
  if (half.infinity) return 0.0;
  // (N/2) P must be 2-torsion: y vanishes there.
  return std::abs(half.y) / (1.0 + std::pow(std::abs(half.x), 1.5));
}

bool oracle_annihilates(const LegendreCurve& curve, Complex x, long long n) {
  return scalar_mul(curve, n, lift_x(curve, x)).infinity;
}

}  // namespace confsect::elliptic
