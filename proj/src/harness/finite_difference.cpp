#include "polymean/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

// Fornberg's recursion for weights at nodes x on the derivative of order m at 0.
std::vector<double> fornberg(const std::vector<double>& x, int m) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0];
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const int mn = std::min(static_cast<int>(i), m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i];
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

std::complex<double> partial_at_step(const ComplexFn& f, int xOrder, int yOrder, std::complex<double> z,
                                     double h) {
    const auto wx = central_weights(xOrder);
    const auto wy = central_weights(yOrder);
    const int px = static_cast<int>(wx.size() / 2);
    const int py = static_cast<int>(wy.size() / 2);
    std::complex<double> sum(0.0, 0.0);
    for (int k = -px; k <= px; ++k) {
        const double a = wx[k + px];
        if (a == 0.0) continue;
        for (int l = -py; l <= py; ++l) {
            const double b = wy[l + py];
            if (b == 0.0) continue;
            sum += a * b * f(z + std::complex<double>(k * h, l * h));
        }
    }
    return sum / std::pow(h, xOrder + yOrder);
}

// Coefficients of X^{d-t} Y^t in (X - iY)^dz (X + iY)^dzbar / 2^{dz+dzbar}.
std::vector<std::complex<double>> wirtinger_expansion(int dz, int dzbar) {
    std::vector<std::complex<double>> poly{1.0};
    auto times = [&](std::complex<double> yCoeff) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += 0.5 * poly[t];
            next[t + 1] += 0.5 * yCoeff * poly[t];
        }
        poly = std::move(next);
    };
    for (int i = 0; i < dz; ++i) times({0.0, -1.0});
    for (int i = 0; i < dzbar; ++i) times({0.0, 1.0});
    return poly;
}

}  // namespace

std::vector<double> central_weights(int order) {
    if (order < 0) throw ParameterError("negative derivative order");
    if (order == 0) return {1.0};
    const int p = (order + 1) / 2 + 1;
    std::vector<double> nodes;
    for (int k = -p; k <= p; ++k) nodes.push_back(k);
    return fornberg(nodes, order);
}

double fd_step(int totalOrder, double scale) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double base = totalOrder <= 2 ? 1e-3 : std::max(1e-3, std::pow(eps, 1.0 / (totalOrder + 4)));
    return base * std::max(1.0, scale);
}

std::complex<double> fd_partial(const ComplexFn& f, int xOrder, int yOrder, std::complex<double> z) {
    if (xOrder + yOrder == 0) return f(z);
    const double h = fd_step(xOrder + yOrder, std::abs(z));
    const auto coarse = partial_at_step(f, xOrder, yOrder, z, h);
    const auto fine = partial_at_step(f, xOrder, yOrder, z, h / 2);
    return (16.0 * fine - coarse) / 15.0;
}

std::complex<double> fd_wirtinger(const ComplexFn& f, int dzOrder, int dzbarOrder, std::complex<double> z) {
    if (dzOrder < 0 || dzbarOrder < 0) throw ParameterError("negative derivative order");
    const int d = dzOrder + dzbarOrder;
    if (d == 0) return f(z);
    const auto coeffs = wirtinger_expansion(dzOrder, dzbarOrder);
    std::complex<double> sum(0.0, 0.0);
    for (int t = 0; t <= d; ++t) {
        if (coeffs[t] == std::complex<double>(0.0, 0.0)) continue;
        sum += coeffs[t] * fd_partial(f, d - t, t, z);
    }
    return sum;
}

std::complex<double> fd_radial_derivative(const RadialFn& g, double rho) {
    const double h = std::min(1e-3 * std::max(1.0, rho), rho / 4.0);
    if (!(h >= 1e-8)) throw NumericError("finite-difference step underflow at rho = " + std::to_string(rho));
    auto stencil = [&](double step) {
        return (-g(rho + 2 * step) + 8.0 * g(rho + step) - 8.0 * g(rho - step) + g(rho - 2 * step)) / (12.0 * step);
    };
    return (16.0 * stencil(h / 2) - stencil(h)) / 15.0;
}

}  // namespace polymean
