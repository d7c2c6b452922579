#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "polymean/finite_difference.hpp"
#include "polymean/function_spec.hpp"

namespace polymean {

inline constexpr int kDefaultQuadrature = 512;

/// Trapezoidal estimate of (1/2pi) int_{-pi}^{pi} f(rho e^{i phi}) e^{-i k phi} dphi
/// on N uniform nodes. Throws ParameterError unless N is even and N >= 8, and
/// unless rho > 0.
std::complex<double> fourier_mode(const ComplexFn& f, int k, double rho, int N = kDefaultQuadrature);
std::complex<double> fourier_mode(const FunctionSpec& spec, int k, double rho, int N = kDefaultQuadrature);

/// Sampled radial coefficient f_k(rho).
struct ModeProfile {
    int modeIndex = 0;
    std::vector<double> radii;
    std::vector<std::complex<double>> values;
    /// Node count when the values came from quadrature; empty for tabulated closed forms.
    std::optional<int> quadraturePoints;
};

/// `count` equally spaced radii from lo to hi inclusive.
std::vector<double> uniform_radii(double lo, double hi, std::size_t count);

ModeProfile sample_mode(const FunctionSpec& spec, int k, std::vector<double> radii, int N = kDefaultQuadrature);
ModeProfile tabulate_profile(int k, std::vector<double> radii, const RadialFn& fk);

/// Which convention the x-derivative mode relation is checked against.
enum class HalfFactor { Included, Omitted };

/// Residuals of the two mode relations for g = df/dx at radius rho:
///   g_{j-1} = c (f_j' + j f_j / rho) + c (f_{j-2}' - (j-2) f_{j-2} / rho)
///   g_{j+1} = c (f_j' - j f_j / rho) + c (f_{j+2}' + (j+2) f_{j+2} / rho)
/// with c = 1/2 (Included) or c = 1 (Omitted).
struct RecursionResidual {
    double lower = 0.0;  ///< mode j - 1
    double upper = 0.0;  ///< mode j + 1
};

RecursionResidual mode_recursion_residual(const FunctionSpec& spec, int j, double rho,
                                          HalfFactor convention = HalfFactor::Included,
                                          int N = kDefaultQuadrature);

/// |rho^2 f'' + rho f' + (lambda^2 rho^2 - k^2) f| at each interior sample
/// (two samples trimmed at each end), using 4th-order central differences on
/// the uniform radius grid. Throws ParameterError for fewer than 5 samples or
/// a non-uniform grid.
std::vector<double> bessel_ode_residuals(const ModeProfile& fk, double lambda, int k);
/// Maximum of bessel_ode_residuals.
double bessel_ode_residual(const ModeProfile& fk, double lambda, int k);

}  // namespace polymean
