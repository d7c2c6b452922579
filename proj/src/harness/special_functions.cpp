#include "polymean/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

// Below this magnitude double-precision cancellation costs at most ~4 digits.
constexpr double kDoubleSeriesLimit = 12.0;
constexpr double kTermTolerance = 1e-18;

const Wide& wide_euler_gamma() {
    static const Wide gamma = [] {
        const int n = 100;
        Wide harmonic = 0;
        for (int k = 1; k <= n; ++k) harmonic += Wide(1) / k;
        const Wide nn = n;
        const Wide n2 = nn * nn;
        // Euler-Maclaurin tail: -1/(2N) + 1/(12N^2) - 1/(120N^4) + 1/(252N^6) - 1/(240N^8)
        return harmonic - log(nn) - 1 / (2 * nn) + 1 / (12 * n2) - 1 / (120 * n2 * n2) +
               1 / (252 * n2 * n2 * n2) - 1 / (240 * n2 * n2 * n2 * n2);
    }();
    return gamma;
}

template <class T>
T abs_value(const T& x) {
    using std::abs;
    return abs(x);
}

template <class T>
T bessel_series(int k, const T& x) {
    const T half = x / 2;
    const T half2 = half * half;
    T term = 1;
    for (int i = 1; i <= k; ++i) term *= half / i;
    T sum = term;
    for (int m = 1;; ++m) {
        term *= -half2 / (T(m) * T(m + k));
        sum += term;
        const bool decreasing = T(m) * T(m + k) > half2;
        if (decreasing && abs_value(term) < kTermTolerance * (1 + abs_value(sum))) break;
    }
    return sum;
}

template <class T>
T neumann_series(const T& x, const T& gamma) {
    using std::log;
    const T half = x / 2;
    const T half2 = half * half;
    const T log_part = log(half) + gamma;
    T power = 1;  // (-1)^m (x/2)^{2m} / (m!)^2
    T harmonic = 0;
    T sum = log_part;
    for (int m = 1;; ++m) {
        power *= -half2 / (T(m) * T(m));
        harmonic += T(1) / m;
        const T term = power * (log_part - harmonic);
        sum += term;
        const bool decreasing = T(m) * T(m) > half2;
        if (decreasing && abs_value(power) * (1 + abs_value(log_part - harmonic)) <
                              kTermTolerance * (1 + abs_value(sum))) {
            break;
        }
    }
    return sum * 2 / boost::math::constants::pi<T>();
}

}  // namespace

double euler_gamma() {
    static const double gamma = wide_euler_gamma().convert_to<double>();
    return gamma;
}

double bessel_j(int k, double x) {
    if (k < 0) throw DomainError("bessel_j order must be nonnegative");
    if (!(std::abs(x) <= kSeriesMaxArgument)) {
        throw DomainError("bessel_j argument " + std::to_string(x) + " outside the series window |x| <= 50");
    }
    if (std::abs(x) <= kDoubleSeriesLimit) return bessel_series<double>(k, x);
    return bessel_series<Wide>(k, Wide(x)).convert_to<double>();
}

double neumann_n0(double x) {
    if (!(x >= kNeumannMinArgument)) {
        throw DomainError("neumann_n0 argument " + std::to_string(x) + " at or too near the singularity");
    }
    if (x > kSeriesMaxArgument) throw DomainError("neumann_n0 argument outside the series window x <= 50");
    if (x <= kDoubleSeriesLimit) return neumann_series<double>(x, euler_gamma());
    return neumann_series<Wide>(Wide(x), wide_euler_gamma()).convert_to<double>();
}

}  // namespace polymean
