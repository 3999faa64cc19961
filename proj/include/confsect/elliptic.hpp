#pragma once

// Four-point sections through torsion of the Legendre curve
// y^2 = x(x-1)(x-lambda), branched over {0, 1, lambda, inf}.  Division
// polynomials produce the torsion x-coordinates; a numeric group-law oracle
// certifies them independently.  Includes the planner that combines torsion
// bases with 24-point spacelevel layers for every m >= 70 of allowed residue.

#include <complex>
#include <utility>
#include <vector>

#include "confsect/mobius.hpp"
#include "confsect/polyroots.hpp"

namespace confsect::elliptic {

using mobius::Complex;
using mobius::Configuration;
using mobius::MobiusMap;
using mobius::SectionOutput;
using mobius::Tolerances;

struct LegendreCurve {
  Complex lambda;  // never 0, 1 or inf
  Complex quad_coeff() const { return -(1.0 + lambda); }  // A in y^2 = x^3 + A x^2 + B x
  Complex lin_coeff() const { return lambda; }            // B
};

// order k: full mode covers the 2k-torsion minus the 2-torsion
// (2k^2 - 2 x-values); primitive mode covers the points of order exactly 4k
// (P(4k)/2 x-values).
struct TorsionSpec {
  int k = 2;
  bool primitive_only = false;

  static TorsionSpec full(int k) { return {k, false}; }
  static TorsionSpec primitive(int k) { return {k, true}; }
};

struct DivisionPolynomial {
  int order = 1;
  std::vector<Complex> coefficients;  // ascending powers of x
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Number of primitive elements of (Z/kZ)^2: multiplicative with
// P(p^e) = p^{2e} - p^{2e-2}; P(1) = 1.
long long primitive_count(long long k);

// Mobius map N with (z1, z2, z3) -> (0, 1, inf) for a deterministic labeling
// of the four points, and the curve with lambda = N(z4).  Rejects
// configurations whose cross-ratio orbit comes within `guard` of {0, 1, inf}.
std::pair<LegendreCurve, MobiusMap> legendre_from_config(const Configuration& config,
                                                         double guard = 1e-4);

// The polynomial whose roots are the x-coordinates of the nonzero k-torsion
// points: psi_k for odd k; even k carries the y-factor convention, so the
// 2-torsion roots x(x-1)(x-lambda) are folded in.
DivisionPolynomial division_polynomial(const LegendreCurve& curve, int k);

// Distinct torsion x-coordinates per the spec; count-checked against
// 2k^2 - 2 (full) or P(4k)/2 (primitive).
std::vector<Complex> torsion_x_values(const LegendreCurve& curve, const TorsionSpec& spec,
                                      double residual_tol = 1e-8);

SectionOutput section_four_torsion(const Configuration& config, const TorsionSpec& spec,
                                   const Tolerances& tol = {});

// m = 0, the direct torsion list {6, 16, 24, 30, 48, 70}, or any m >= 70 with
// m mod 24 in {0, 6, 16, 22}: torsion base plus (m - base)/24 spacelevel
// layers.
SectionOutput section_four_planned(const Configuration& config, int m,
                                   const Tolerances& tol = {});

// ---- numeric group law, the independent oracle ----

struct CurvePoint {
  Complex x{}, y{};
  bool infinity = false;
};

CurvePoint curve_identity();
Complex curve_rhs(const LegendreCurve& curve, Complex x);  // x(x-1)(x-lambda)
CurvePoint lift_x(const LegendreCurve& curve, Complex x);
CurvePoint negate(const CurvePoint& p);
CurvePoint add(const LegendreCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const LegendreCurve& curve, long long n, const CurvePoint& p);

// Residual of (N)P = O for the point above x, N even: |y((N/2) P)| up to
// normalization; exact annihilations report 0.
double torsion_oracle_residual(const LegendreCurve& curve, Complex x, int n_torsion);

// True iff n * (point above x) lands exactly on the identity under the
// branched numeric group law.
bool oracle_annihilates(const LegendreCurve& curve, Complex x, long long n);

}  // namespace confsect::elliptic
