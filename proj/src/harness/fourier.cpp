#include "polymean/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

void check_quadrature(int N) {
    if (N < 8 || N % 2 != 0) throw ParameterError("quadrature size must be even and at least 8");
}

// df/dx through the oracle when available: d/dx = d/dz + d/dzbar.
std::complex<double> x_derivative(const FunctionSpec& spec, std::complex<double> z) {
    return mixed_wirtinger(spec, 1, 0, z) + mixed_wirtinger(spec, 0, 1, z);
}

}  // namespace

std::complex<double> fourier_mode(const ComplexFn& f, int k, double rho, int N) {
    check_quadrature(N);
    if (!(rho > 0.0)) throw ParameterError("fourier_mode requires rho > 0");
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < N; ++j) {
        const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * j / N;
        sum += f(std::polar(rho, phi)) * std::polar(1.0, -k * phi);
    }
    return sum / static_cast<double>(N);
}

std::complex<double> fourier_mode(const FunctionSpec& spec, int k, double rho, int N) {
    return fourier_mode(as_callable(spec), k, rho, N);
}

std::vector<double> uniform_radii(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) throw ParameterError("uniform_radii needs count >= 2 and hi > lo");
    std::vector<double> r(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) r[i] = lo + step * static_cast<double>(i);
    r.back() = hi;
    return r;
}

ModeProfile sample_mode(const FunctionSpec& spec, int k, std::vector<double> radii, int N) {
    check_quadrature(N);
    ModeProfile profile{k, std::move(radii), {}, N};
    profile.values.reserve(profile.radii.size());
    const auto f = as_callable(spec);
    for (double rho : profile.radii) profile.values.push_back(fourier_mode(f, k, rho, N));
    return profile;
}

ModeProfile tabulate_profile(int k, std::vector<double> radii, const RadialFn& fk) {
    ModeProfile profile{k, std::move(radii), {}, std::nullopt};
    profile.values.reserve(profile.radii.size());
    for (double rho : profile.radii) profile.values.push_back(fk(rho));
    return profile;
}

RecursionResidual mode_recursion_residual(const FunctionSpec& spec, int j, double rho, HalfFactor convention,
                                          int N) {
    check_quadrature(N);
    const auto f = as_callable(spec);
    const ComplexFn g = [&spec](std::complex<double> z) { return x_derivative(spec, z); };
    const double c = convention == HalfFactor::Included ? 0.5 : 1.0;

    auto mode = [&](int k) -> RadialFn {
        return [&f, k, N](double r) { return fourier_mode(f, k, r, N); };
    };
    // c (f_k' + sign k f_k / rho)
    auto piece = [&](int k, double sign) {
        const RadialFn fk = mode(k);
        return c * (fd_radial_derivative(fk, rho) + sign * k * fk(rho) / rho);
    };

    const auto lowerExpected = piece(j, +1.0) + piece(j - 2, -1.0);
    const auto upperExpected = piece(j, -1.0) + piece(j + 2, +1.0);
    const auto lowerActual = fourier_mode(g, j - 1, rho, N);
    const auto upperActual = fourier_mode(g, j + 1, rho, N);
    return {std::abs(lowerActual - lowerExpected), std::abs(upperActual - upperExpected)};
}

std::vector<double> bessel_ode_residuals(const ModeProfile& fk, double lambda, int k) {
    const std::size_t n = fk.radii.size();
    if (n < 5) throw ParameterError("bessel_ode_residual needs at least 5 samples");
    if (fk.values.size() != n) throw ParameterError("mode profile radii and values differ in length");
    const double h = (fk.radii.back() - fk.radii.front()) / static_cast<double>(n - 1);
    if (!(h > 0.0)) throw ParameterError("mode profile radii must increase");
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(fk.radii[i] - fk.radii[i - 1] - h) > 1e-9 * std::max(1.0, h)) {
            throw ParameterError("mode profile radii must be uniformly spaced");
        }
    }
    const auto& f = fk.values;
    std::vector<double> out;
    out.reserve(n - 4);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double rho = fk.radii[i];
        const auto d1 = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
        const auto d2 = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) / (12.0 * h * h);
        const auto r = rho * rho * d2 + rho * d1 + (lambda * lambda * rho * rho - double(k) * k) * f[i];
        out.push_back(std::abs(r));
    }
    return out;
}

double bessel_ode_residual(const ModeProfile& fk, double lambda, int k) {
    const auto r = bessel_ode_residuals(fk, lambda, k);
    return *std::max_element(r.begin(), r.end());
}

}  // namespace polymean
