#pragma once

#include "polymean/problem_params.hpp"
#include "polymean/sym_poly.hpp"

namespace polymean {

/// Exact value of sum_{nu=1..n} exp(2 pi i t nu / n): n when n | t, else 0.
int roots_sum(long t, int n);

/// Weighted vertex sum  sum_nu (zeta_nu u)^s f(zeta_nu u + z)  expanded exactly,
/// with zeta_nu = R e^{2 pi i nu / n} and zbar(zeta_nu u) = R zeta-bar u^{-1}.
/// Every surviving exponent t = s + j - p with n | t is kept, including t != 0.
/// Throws DomainError when f carries u, R or v.
SymPoly lhs_polygon(const SymPoly& f, const ProblemParams& params);

/// Derivative side  sum_{p=s..q} n R^{2p} / ((p-s)! p!) dz^{p-s} dzbar^p f.
SymPoly rhs_derivative(const SymPoly& f, const ProblemParams& params);

/// lhs_polygon(f) - rhs_derivative(f); zero iff the identity holds for all z, zbar, u, R.
SymPoly residual(const SymPoly& f, const ProblemParams& params);

/// Rotated form with v = e^{i beta}: the vertex sum of f(zeta u v + z v) minus the
/// derivative side applied to g(z) = f(z v), i.e. z -> z v and zbar -> zbar v^{-1}
/// before differentiating. Setting v = 1 recovers residual(f).
SymPoly rotated_residual(const SymPoly& f, const ProblemParams& params);

/// True iff every monomial z^a zbar^b of f has a <= h and b <= m - 1.
bool is_admissible_form(const SymPoly& f, const ProblemParams& params);

}  // namespace polymean
