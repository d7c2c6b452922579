#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "polymean/finite_difference.hpp"
#include "polymean/function_spec.hpp"
#include "polymean/problem_params.hpp"

namespace polymean {

/// "PMEA"
inline constexpr std::uint64_t kDefaultSeed = 0x504D4541;

struct ScanPoint {
    std::complex<double> z;
    double alpha = 0.0;
};

/// Uniform doubles in [0, 1) from a seeded mt19937_64, identical on every platform.
class UnitStream {
public:
    explicit UnitStream(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 engine_;
};

/// `points` centers drawn uniformly (by area) from rMin <= |z| <= rMax, each paired
/// with the `alphas` angles 2 pi k / alphas.
std::vector<ScanPoint> default_scan_grid(std::uint64_t seed = kDefaultSeed, int points = 64, int alphas = 8,
                                         double rMin = 0.1, double rMax = 0.5);

/// sum_nu (zeta_nu e^{i alpha})^s f(z + zeta_nu e^{i alpha}) with zeta_nu = R e^{2 pi i nu / n}.
std::complex<double> numeric_vertex_sum(const ComplexFn& f, const ProblemParams& params, double rValue,
                                        std::complex<double> z, double alpha);

/// Weighted vertex sum minus sum_{p=s}^{q} n R^{2p} / ((p-s)! p!) dz^{p-s} dzbar^p f(z).
/// Derivatives come from the oracle when registered, else from finite differences,
/// which are only accepted for q <= 3 (ParameterError otherwise).
std::complex<double> numeric_identity_residual(const FunctionSpec& spec, const ProblemParams& params,
                                               double rValue, std::complex<double> z, double alpha);

/// Maximum residual modulus over the grid.
double numeric_identity_scan(const FunctionSpec& spec, const ProblemParams& params, double rValue,
                             std::span<const ScanPoint> grid);

/// Same scan for an arbitrary callable, with finite-difference derivatives (q <= 3).
double numeric_identity_scan(const ComplexFn& f, const ProblemParams& params, double rValue,
                             std::span<const ScanPoint> grid);

/// Scan of f(z) = sum_k coeffs[k] |z|^{2k} over the default grid.
double radial_solution_check(std::span<const std::complex<double>> coeffs, const ProblemParams& params,
                             double rValue);
double radial_solution_check(std::span<const std::complex<double>> coeffs, const ProblemParams& params,
                             double rValue, std::span<const ScanPoint> grid);

/// Numeric rank of f -> residual(f) on span{z^a zbar^b : a <= K, b <= L},
/// estimated by SVD of floating residuals at random (z, alpha, R) samples.
/// Residuals use a direct vertex sum and falling-factorial derivatives, never
/// the symbolic engine.
std::size_t numeric_residual_rank(const ProblemParams& params, int K, int L, std::uint64_t seed = kDefaultSeed);

}  // namespace polymean
