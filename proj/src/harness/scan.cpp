#include "polymean/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

constexpr int kMaxFiniteDifferenceQ = 3;

std::complex<double> ipow(std::complex<double> base, int k) {
    std::complex<double> r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// a (a-1) ... (a-k+1)
double falling(int a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a - i;
    return r;
}

std::complex<double> vertex(const ProblemParams& params, double rValue, int nu, double alpha) {
    return std::polar(rValue, 2.0 * std::numbers::pi * nu / params.n() + alpha);
}

template <class Derivative>
std::complex<double> residual_with(const ComplexFn& f, Derivative&& derivative, const ProblemParams& params,
                                   double rValue, std::complex<double> z, double alpha) {
    std::complex<double> rhs(0.0, 0.0);
    for (int p = params.s(); p <= params.q(); ++p) {
        const double weight = params.n() * std::pow(rValue, 2 * p) / (factorial(p - params.s()) * factorial(p));
        rhs += weight * derivative(p - params.s(), p, z);
    }
    return numeric_vertex_sum(f, params, rValue, z, alpha) - rhs;
}

void require_fd_range(const ProblemParams& params) {
    if (params.q() > kMaxFiniteDifferenceQ) {
        throw ParameterError("finite-difference derivatives require q <= 3, got q = " + std::to_string(params.q()));
    }
}

}  // namespace

std::vector<ScanPoint> default_scan_grid(std::uint64_t seed, int points, int alphas, double rMin, double rMax) {
    if (points < 1 || alphas < 1) throw ParameterError("scan grid needs at least one point and one angle");
    if (!(rMin >= 0.0 && rMax >= rMin)) throw ParameterError("scan annulus needs 0 <= rMin <= rMax");
    UnitStream rng(seed);
    std::vector<ScanPoint> grid;
    grid.reserve(static_cast<std::size_t>(points) * static_cast<std::size_t>(alphas));
    for (int i = 0; i < points; ++i) {
        const double radius = std::sqrt(rng.uniform(rMin * rMin, rMax * rMax));
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const auto z = std::polar(radius, angle);
        for (int k = 0; k < alphas; ++k) grid.push_back({z, 2.0 * std::numbers::pi * k / alphas});
    }
    return grid;
}

std::complex<double> numeric_vertex_sum(const ComplexFn& f, const ProblemParams& params, double rValue,
                                        std::complex<double> z, double alpha) {
    std::complex<double> sum(0.0, 0.0);
    for (int nu = 1; nu <= params.n(); ++nu) {
        const auto w = vertex(params, rValue, nu, alpha);
        sum += ipow(w, params.s()) * f(z + w);
    }
    return sum;
}

std::complex<double> numeric_identity_residual(const FunctionSpec& spec, const ProblemParams& params,
                                               double rValue, std::complex<double> z, double alpha) {
    if (!spec.has_oracle()) require_fd_range(params);
    return residual_with(
        as_callable(spec), [&](int a, int b, std::complex<double> w) { return mixed_wirtinger(spec, a, b, w); },
        params, rValue, z, alpha);
}

double numeric_identity_scan(const FunctionSpec& spec, const ProblemParams& params, double rValue,
                             std::span<const ScanPoint> grid) {
    if (!(rValue > 0.0)) throw ParameterError("scan requires R > 0");
    double worst = 0.0;
    for (const auto& pt : grid) {
        worst = std::max(worst, std::abs(numeric_identity_residual(spec, params, rValue, pt.z, pt.alpha)));
    }
    return worst;
}

double numeric_identity_scan(const ComplexFn& f, const ProblemParams& params, double rValue,
                             std::span<const ScanPoint> grid) {
    if (!(rValue > 0.0)) throw ParameterError("scan requires R > 0");
    require_fd_range(params);
    double worst = 0.0;
    for (const auto& pt : grid) {
        const auto r = residual_with(
            f, [&](int a, int b, std::complex<double> w) { return fd_wirtinger(f, a, b, w); }, params, rValue,
            pt.z, pt.alpha);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double radial_solution_check(std::span<const std::complex<double>> coeffs, const ProblemParams& params,
                             double rValue) {
    const auto grid = default_scan_grid();
    return radial_solution_check(coeffs, params, rValue, grid);
}

double radial_solution_check(std::span<const std::complex<double>> coeffs, const ProblemParams& params,
                             double rValue, std::span<const ScanPoint> grid) {
    SymPoly f;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        // Coefficients are carried exactly through their double values.
        const mpq_class re(coeffs[k].real());
        const mpq_class im(coeffs[k].imag());
        const GaussianRational c(Rational(re.get_num(), re.get_den()), Rational(im.get_num(), im.get_den()));
        const int d = static_cast<int>(k);
        f.add_term(Monomial{d, d, 0, 0, 0}, c);
    }
    return numeric_identity_scan(FunctionSpec::polynomial(f), params, rValue, grid);
}

std::size_t numeric_residual_rank(const ProblemParams& params, int K, int L, std::uint64_t seed) {
    if (K < 0 || L < 0) throw ParameterError("degree bounds must be nonnegative");
    const int cols = (K + 1) * (L + 1);
    const int rows = 2 * cols + 8;
    UnitStream rng(seed);
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto z = std::polar(rng.uniform(0.2, 1.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
        const double alpha = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double rValue = rng.uniform(0.5, 1.5);
        const auto zb = std::conj(z);
        int c = 0;
        for (int a = 0; a <= K; ++a) {
            for (int b = 0; b <= L; ++b, ++c) {
                const ComplexFn mono = [a, b](std::complex<double> w) {
                    return ipow(w, a) * ipow(std::conj(w), b);
                };
                auto derivative = [&](int da, int db, std::complex<double>) -> std::complex<double> {
                    if (da > a || db > b) return 0.0;
                    return falling(a, da) * falling(b, db) * ipow(z, a - da) * ipow(zb, b - db);
                };
                m(r, c) = residual_with(mono, derivative, params, rValue, z, alpha);
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) < 1e-12) return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-9 * sv(0)) ++rank;
    }
    return rank;
}

}  // namespace polymean
