#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polymean {

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;
using RadialFn = std::function<std::complex<double>(double)>;

/// Fornberg weights of the 4th-order central stencil for the given derivative
/// order on integer offsets -P..P, P = floor((order + 1) / 2) + 1.
std::vector<double> central_weights(int order);

/// Base step for a derivative of the given total order at a point of modulus
/// `scale`: 1e-3 * max(1, scale) up to second order, widened for higher orders
/// so that roundoff does not swamp the stencil.
double fd_step(int totalOrder, double scale);

/// (d/dx)^xOrder (d/dy)^yOrder f at z by tensor-product stencils, one Richardson level.
std::complex<double> fd_partial(const ComplexFn& f, int xOrder, int yOrder, std::complex<double> z);

/// (d/dz)^dzOrder (d/dzbar)^dzbarOrder f at z, expanded through
/// d/dz = (d/dx - i d/dy) / 2 and d/dzbar = (d/dx + i d/dy) / 2.
std::complex<double> fd_wirtinger(const ComplexFn& f, int dzOrder, int dzbarOrder, std::complex<double> z);

/// First derivative of g at rho > 0. Throws NumericError when the stencil
/// step would have to shrink below 1e-8 to stay on the positive axis.
std::complex<double> fd_radial_derivative(const RadialFn& g, double rho);

}  // namespace polymean
