#include "polymean/identity_engine.hpp"

#include <vector>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

void require_pure(const SymPoly& f, const char* where) {
    if (!f.is_pure()) throw DomainError(std::string(where) + ": input must be a polynomial in z and zbar only");
}

// Expansion of (zeta u v + z v)^a (zeta-bar u^-1 v^-1 + zbar v^-1)^b weighted by
// (zeta u)^s and summed over the vertices. `rotate` selects v = e^{i beta}; with
// rotate = false every v exponent is zero.
SymPoly vertex_sum(const SymPoly& f, const ProblemParams& params, bool rotate) {
    const int n = params.n();
    const int s = params.s();
    SymPoly out;
    for (const auto& [mono, coeff] : f.terms()) {
        const int a = mono.zPow;
        const int b = mono.zbarPow;
        for (int j = 0; j <= a; ++j) {
            for (int p = 0; p <= b; ++p) {
                const int t = s + j - p;
                const int surviving = roots_sum(t, n);
                if (surviving == 0) continue;
                // (zeta u v)^j (z v)^{a-j} (zeta-bar u^-1 v^-1)^p (zbar v^-1)^{b-p}
                const int vPow = rotate ? j + (a - j) - p - (b - p) : 0;
                const Monomial term{a - j, b - p, t, s + j + p, vPow};
                const mpz_class weight = binomial(a, j) * binomial(b, p) * surviving;
                out.add_term(term, coeff * GaussianRational(Rational(weight)));
            }
        }
    }
    return out;
}

SymPoly derivative_side(const SymPoly& g, const ProblemParams& params) {
    const int n = params.n();
    const int s = params.s();
    SymPoly out;
    for (int p = s; p <= params.q(); ++p) {
        SymPoly d = wirtinger(g, p - s, p);
        if (d.is_zero()) continue;
        const Rational weight(mpz_class(n), factorial(p - s) * factorial(p));
        out += SymPoly::term(Monomial{0, 0, 0, 2 * p, 0}, GaussianRational(weight)) * d;
    }
    return out;
}

}  // namespace

int roots_sum(long t, int n) {
    if (n < 1) throw ParameterError("roots_sum requires n >= 1");
    return t % n == 0 ? n : 0;
}

SymPoly lhs_polygon(const SymPoly& f, const ProblemParams& params) {
    require_pure(f, "lhs_polygon");
    return vertex_sum(f, params, false);
}

SymPoly rhs_derivative(const SymPoly& f, const ProblemParams& params) {
    require_pure(f, "rhs_derivative");
    return derivative_side(f, params);
}

SymPoly residual(const SymPoly& f, const ProblemParams& params) {
    require_pure(f, "residual");
    return vertex_sum(f, params, false) - derivative_side(f, params);
}

SymPoly rotated_residual(const SymPoly& f, const ProblemParams& params) {
    require_pure(f, "rotated_residual");
    // g(z) = f(z v): z^a zbar^b -> v^{a-b} z^a zbar^b
    SymPoly rotated;
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial m = mono;
        m.vPow = mono.zPow - mono.zbarPow;
        rotated.add_term(m, coeff);
    }
    return vertex_sum(f, params, true) - derivative_side(rotated, params);
}

bool is_admissible_form(const SymPoly& f, const ProblemParams& params) {
    require_pure(f, "is_admissible_form");
    for (const auto& [mono, coeff] : f.terms()) {
        if (mono.zPow > params.h() || mono.zbarPow > params.m() - 1) return false;
    }
    return true;
}

}  // namespace polymean
