#pragma once

namespace polymean {

/// Euler's constant, lim (H_N - ln N), via the Euler-Maclaurin corrected limit.
double euler_gamma();

/// Bessel function of the first kind by its ascending series.
///
/// The series is summed until the next term is below 1e-18 * (1 + |partial sum|)
/// and the terms are decreasing. Arguments with |x| > 12 are summed in
/// 50-digit floating point to absorb the cancellation between large terms.
/// Throws DomainError for k < 0 or |x| > 50.
double bessel_j(int k, double x);

/// Neumann function N_0 from the logarithmic series
///   N_0(x) = (2/pi) sum_m (-1)^m (x/2)^{2m} / (m!)^2 (ln(x/2) + gamma - H_m).
/// Throws DomainError outside 1e-8 <= x <= 50.
double neumann_n0(double x);

/// Lower end of the window accepted by neumann_n0.
inline constexpr double kNeumannMinArgument = 1e-8;
/// Upper end of the series window for bessel_j and neumann_n0.
inline constexpr double kSeriesMaxArgument = 50.0;

}  // namespace polymean
