#include <doctest.h>

#include <complex>
#include <numbers>
#include <string>

#include "polymean/errors.hpp"
#include "polymean/identity_engine.hpp"
#include "test_support.hpp"

using namespace polymean;
using polymean::testing::cd;
using polymean::testing::Gen;

namespace {

SymPoly mono(int a, int b, int u = 0, int r = 0, long c = 1) {
    return SymPoly::term(Monomial{a, b, u, r, 0}, GaussianRational(c));
}

// Random valid parameters with m <= n.
ProblemParams random_params(Gen& gen, int maxN) {
    const int n = gen.integer(3, maxN);
    const int m = gen.integer(1, n);
    const int s = gen.integer(0, m - 1);
    const int h = gen.integer(0, n - s - 1);
    return ProblemParams::create(n, m, s, h);
}

SymPoly random_admissible(Gen& gen, const ProblemParams& p) { return gen.pure_poly(p.h(), p.m() - 1, 0.6, 7); }

void check_against_oracle(const SymPoly& f, const ProblemParams& p, int points, std::uint64_t seed) {
    Gen gen(seed);
    const SymPoly res = residual(f, p);
    const SymPoly lhs = lhs_polygon(f, p);
    for (int i = 0; i < points; ++i) {
        const cd zpt = gen.point(0.0, 1.2);
        const double alpha = gen.real(0.0, 2 * std::numbers::pi);
        const double R = gen.real(0.3, 1.5);
        const cd lhsOracle = testing::oracle_vertex_sum(f, p, R, zpt, alpha);
        REQUIRE(std::abs(poly_eval(lhs, zpt, alpha, R) - lhsOracle) <= 1e-10 * (1.0 + std::abs(lhsOracle)));
        REQUIRE(std::abs(poly_eval(res, zpt, alpha, R) - testing::oracle_residual(f, p, R, zpt, alpha)) <=
                1e-10 * (1.0 + std::abs(lhsOracle)));
    }
}

}  // namespace

TEST_CASE("params_new derives q and validates constraints") {
    CHECK(params_new(4, 2, 0, 1).q() == 1);
    CHECK(params_new(5, 3, 1, 2).q() == 2);
    CHECK(params_new(9, 3, 0, 8).q() == 2);
    try {
        params_new(3, 2, 2, 0);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("s <= m-1") != std::string::npos);
    }
    CHECK_THROWS_AS(params_new(2, 1, 0, 0), ParameterError);
    CHECK_THROWS_AS(params_new(4, 0, 0, 0), ParameterError);
    CHECK_THROWS_AS(params_new(4, 2, -1, 0), ParameterError);
    CHECK_THROWS_AS(params_new(4, 2, 1, 3), ParameterError);
    CHECK_THROWS_AS(params_new(4, 2, 0, -1), ParameterError);
}

TEST_CASE("s <= q is a consequence of the constraints") {
    for (int n = 3; n <= 10; ++n)
        for (int m = 1; m <= 12; ++m)
            for (int s = 0; s <= m - 1; ++s)
                for (int h = 0; h < n - s; ++h) REQUIRE(params_new(n, m, s, h).s() <= params_new(n, m, s, h).q());
}

TEST_CASE("roots_sum matches the direct sum of roots of unity") {
    CHECK(roots_sum(0, 4) == 4);
    CHECK(roots_sum(2, 4) == 0);
    CHECK(roots_sum(8, 4) == 4);
    CHECK(roots_sum(-6, 3) == 3);
    for (int n = 1; n <= 9; ++n) {
        for (int t = -20; t <= 20; ++t) {
            cd direct(0.0, 0.0);
            for (int nu = 1; nu <= n; ++nu) direct += std::polar(1.0, 2.0 * std::numbers::pi * t * nu / n);
            REQUIRE(std::abs(direct - double(roots_sum(t, n))) < 1e-12);
        }
    }
    CHECK_THROWS_AS(roots_sum(1, 0), ParameterError);
}

TEST_CASE("lhs_polygon examples") {
    const auto p401 = params_new(4, 2, 0, 1);
    CHECK(lhs_polygon(SymPoly(1), p401) == SymPoly(4));
    CHECK(lhs_polygon(mono(1, 1), p401) == mono(0, 0, 0, 2, 4) + mono(1, 1, 0, 0, 4));
    CHECK(lhs_polygon(mono(0, 1), params_new(4, 2, 1, 1)) == mono(0, 0, 0, 2, 4));
    CHECK_THROWS_AS(lhs_polygon(SymPoly::R(), p401), DomainError);
    CHECK_THROWS_AS(lhs_polygon(SymPoly::u(), p401), DomainError);
}

TEST_CASE("rhs_derivative examples") {
    const auto p401 = params_new(4, 2, 0, 1);
    CHECK(rhs_derivative(mono(1, 1), p401) == mono(1, 1, 0, 0, 4) + mono(0, 0, 0, 2, 4));
    CHECK(rhs_derivative(mono(0, 1), params_new(4, 2, 1, 1)) == mono(0, 0, 0, 2, 4));
    CHECK(rhs_derivative(SymPoly(1), p401) == SymPoly(4));
    CHECK_THROWS_AS(rhs_derivative(SymPoly::v(), p401), DomainError);
}

TEST_CASE("residual examples, confirmed by the numeric oracle") {
    const auto p401 = params_new(4, 2, 0, 1);
    const auto p501 = params_new(5, 2, 0, 1);
    CHECK(residual(mono(1, 1), p401).is_zero());
    CHECK(residual(mono(2, 2), p501) == mono(0, 0, 0, 4, 5));
    CHECK(residual(mono(0, 2), p401).is_zero());
    check_against_oracle(mono(2, 2), p501, 20, 1);
    check_against_oracle(mono(0, 2), p401, 20, 2);
    check_against_oracle(mono(1, 1), p401, 20, 3);
}

TEST_CASE("aliasing terms are kept when m > n") {
    // zbar^3 with n = 3: p = 3 gives t = -3, a multiple of n.
    const auto p = params_new(3, 5, 0, 2);
    CHECK(residual(mono(0, 3), p) == mono(0, 0, -3, 3, 3));
    check_against_oracle(mono(0, 3), p, 20, 4);
    Gen gen(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen.integer(3, 5);
        const int m = gen.integer(n + 1, n + 4);
        const int s = gen.integer(0, n - 1);
        const auto q = params_new(n, m, s, gen.integer(0, n - s - 1));
        check_against_oracle(gen.pure_poly(5, 6, 0.3, 3), q, 5, 100 + trial);
    }
}

TEST_CASE("residual agrees with the oracle on random polynomials") {
    Gen gen(6);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_params(gen, 7);
        check_against_oracle(gen.pure_poly(4, 4, 0.4, 5), p, 4, 200 + trial);
    }
}

TEST_CASE("rotated_residual examples") {
    Gen gen(7);
    for (int trial = 0; trial < 20; ++trial) CHECK(rotated_residual(SymPoly(1), random_params(gen, 9)).is_zero());
    CHECK(rotated_residual(mono(1, 1), params_new(4, 2, 0, 1)).is_zero());
    CHECK(rotated_residual(mono(0, 2), params_new(4, 2, 0, 1)).is_zero());
    CHECK(rotated_residual(mono(1, 1), params_new(4, 2, 1, 1)).is_zero());
}

TEST_CASE("rotated_residual agrees with a direct rotated evaluation") {
    // LHS: sum_nu w^s f(w v + z v); RHS: derivatives of g(z) = f(z v), which equal
    // v^{-s} (D f)(z v) by the chain rule.
    Gen gen(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_params(gen, 6);
        const SymPoly f = gen.pure_poly(3, 4, 0.5, 4);
        const SymPoly rr = rotated_residual(f, p);
        for (int i = 0; i < 3; ++i) {
            const cd zpt = gen.point(0.0, 1.0);
            const double alpha = gen.real(0.0, 2 * std::numbers::pi);
            const double beta = gen.real(0.0, 2 * std::numbers::pi);
            const double R = gen.real(0.3, 1.3);
            const cd v = std::polar(1.0, beta);
            cd lhs(0.0, 0.0);
            for (int nu = 1; nu <= p.n(); ++nu) {
                const cd w = std::polar(R, 2.0 * std::numbers::pi * nu / p.n() + alpha);
                const cd x = w * v + zpt * v;
                cd fx(0.0, 0.0);
                for (const auto& [m, c] : f.terms())
                    fx += c.to_complex() * testing::ipow(x, m.zPow) * testing::ipow(std::conj(x), m.zbarPow);
                lhs += testing::ipow(w, p.s()) * fx;
            }
            const cd rhs = testing::oracle_derivative_side(f, p, R, zpt * v) / testing::ipow(v, p.s());
            REQUIRE(std::abs(poly_eval(rr, zpt, alpha, R, beta) - (lhs - rhs)) < 1e-9 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("is_admissible_form examples") {
    const auto p = params_new(4, 2, 0, 1);
    CHECK(is_admissible_form(mono(1, 1), p));
    CHECK_FALSE(is_admissible_form(mono(0, 2), p));
    CHECK(is_admissible_form(SymPoly(), p));
    CHECK_FALSE(is_admissible_form(mono(2, 0), p));
}

TEST_CASE("residual is linear") {
    Gen gen(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(gen, 7);
        const SymPoly f = gen.pure_poly(4, 4, 0.4);
        const SymPoly g = gen.pure_poly(4, 4, 0.4);
        const GaussianRational a = gen.gaussian(5);
        const GaussianRational b = gen.gaussian(5);
        REQUIRE(residual(a * f + b * g, p) == a * residual(f, p) + b * residual(g, p));
    }
}

TEST_CASE("sufficiency: admissible polynomials have zero residual when m <= n") {
    Gen gen(10);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = random_params(gen, 9);
        const SymPoly f = random_admissible(gen, p);
        REQUIRE(is_admissible_form(f, p));
        REQUIRE(residual(f, p).is_zero());
    }
}

TEST_CASE("rotated form: v = 1 recovers the residual, admissible f rotate to zero") {
    Gen gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(gen, 8);
        const SymPoly f = gen.pure_poly(p.h() + 1, p.m() + 1, 0.4, 5);
        REQUIRE(substitute_v_one(rotated_residual(f, p)) == residual(f, p));
        const SymPoly g = random_admissible(gen, p);
        REQUIRE(rotated_residual(g, p).is_zero());
    }
}

TEST_CASE("residual commutes with d/dz + d/dzbar") {
    Gen gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(gen, 7);
        const SymPoly f = gen.pure_poly(5, 5, 0.4);
        const SymPoly lhs = residual(wirtinger_dz(f) + wirtinger_dzbar(f), p);
        const SymPoly r = residual(f, p);
        REQUIRE(lhs == wirtinger_dz(r) + wirtinger_dzbar(r));
    }
}

TEST_CASE("vertex sums of admissible polynomials are alpha-independent below the aliasing threshold") {
    Gen gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(gen, 9);
        const SymPoly lhs = lhs_polygon(random_admissible(gen, p), p);
        for (const auto& [m, c] : lhs.terms()) REQUIRE(m.uPow == 0);
    }
}
