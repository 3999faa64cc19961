#pragma once

// Dense complex polynomials and an Aberth-Ehrlich simultaneous root finder
// with Newton polishing and residual certification.  Coefficient arithmetic
// runs in long double: division-polynomial coefficients grow fast and the
// extra mantissa keeps the roots honest in double.

#include <complex>
#include <vector>

#include "confsect/errors.hpp"

namespace confsect::roots {

using LComplex = std::complex<long double>;
using Poly = std::vector<LComplex>;  // ascending, p[i] is the x^i coefficient

Poly poly_from(std::initializer_list<std::complex<double>> coeffs);
int degree(const Poly& p);  // index of the last exactly nonzero coefficient
Poly multiply(const Poly& p, const Poly& q);
Poly add(const Poly& p, const Poly& q);
Poly subtract(const Poly& p, const Poly& q);
Poly scale(const Poly& p, LComplex s);
LComplex evaluate(const Poly& p, LComplex x);
Poly derivative(const Poly& p);

struct RootReport {
  std::vector<std::complex<double>> roots;    // degree(p) of them, zeros included
  double max_relative_residual = 0.0;         // |p(z)| / sum |p_i||z|^i
};

// All roots of p.  Certification is backward-error style: every root must
// satisfy |p(z)| <= residual_tol * sum_i |p_i| |z|^i, else NumericError.
RootReport find_roots(const Poly& p, double residual_tol = 1e-8);

}  // namespace confsect::roots
