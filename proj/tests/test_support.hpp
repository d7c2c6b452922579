#pragma once

// Generators and floating-point oracles shared by the test suites. The
// oracles evaluate the identity by brute force and never touch the symbolic
// expansion they are used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "polymean/problem_params.hpp"
#include "polymean/sym_poly.hpp"

namespace polymean::testing {

using cd = std::complex<double>;

inline cd ipow(cd base, int k) {
    cd r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

inline double falling(int a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a - i;
    return r;
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool chance(double p) { return real(0.0, 1.0) < p; }

    /// p/q with |p/q| <= bound, q in [1, 6].
    Rational rational(int bound) {
        const int q = integer(1, 6);
        return Rational(mpz_class(integer(-bound * q, bound * q)), mpz_class(q));
    }

    /// Gaussian rational of modulus at most sqrt(2) * bound.
    GaussianRational gaussian(int bound) { return {rational(bound), rational(bound)}; }

    /// Random polynomial in z, zbar with degrees <= maxZ, maxZbar.
    SymPoly pure_poly(int maxZ, int maxZbar, double density = 0.5, int bound = 7) {
        SymPoly p;
        for (int a = 0; a <= maxZ; ++a) {
            for (int b = 0; b <= maxZbar; ++b) {
                if (chance(density)) p.add_term(Monomial{a, b, 0, 0, 0}, gaussian(bound));
            }
        }
        return p;
    }

    /// Random polynomial in all five indeterminates.
    SymPoly full_poly(int terms, int maxDeg, int bound = 5) {
        SymPoly p;
        for (int t = 0; t < terms; ++t) {
            const Monomial m{integer(0, maxDeg), integer(0, maxDeg), integer(-maxDeg, maxDeg), integer(0, maxDeg),
                             integer(-maxDeg, maxDeg)};
            p.add_term(m, gaussian(bound));
        }
        return p;
    }

    cd point(double rMin, double rMax) {
        return std::polar(std::sqrt(real(rMin * rMin, rMax * rMax)), real(0.0, 2.0 * std::numbers::pi));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Brute-force weighted vertex sum of a pure polynomial.
inline cd oracle_vertex_sum(const SymPoly& f, const ProblemParams& p, double R, cd z, double alpha) {
    cd sum(0.0, 0.0);
    for (int nu = 1; nu <= p.n(); ++nu) {
        const cd w = std::polar(R, 2.0 * std::numbers::pi * nu / p.n() + alpha);
        const cd x = z + w;
        cd fx(0.0, 0.0);
        for (const auto& [m, c] : f.terms()) fx += c.to_complex() * ipow(x, m.zPow) * ipow(std::conj(x), m.zbarPow);
        sum += ipow(w, p.s()) * fx;
    }
    return sum;
}

/// Derivative side of the identity using falling factorials on each monomial.
inline cd oracle_derivative_side(const SymPoly& f, const ProblemParams& p, double R, cd z) {
    cd sum(0.0, 0.0);
    for (int k = p.s(); k <= p.q(); ++k) {
        const double weight = p.n() * std::pow(R, 2 * k) / (factorial(k - p.s()) * factorial(k));
        for (const auto& [m, c] : f.terms()) {
            const int da = k - p.s();
            const int db = k;
            if (da > m.zPow || db > m.zbarPow) continue;
            sum += weight * c.to_complex() * falling(m.zPow, da) * falling(m.zbarPow, db) *
                   ipow(z, m.zPow - da) * ipow(std::conj(z), m.zbarPow - db);
        }
    }
    return sum;
}

inline cd oracle_residual(const SymPoly& f, const ProblemParams& p, double R, cd z, double alpha) {
    return oracle_vertex_sum(f, p, R, z, alpha) - oracle_derivative_side(f, p, R, z);
}

}  // namespace polymean::testing
