#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <string>

#include "polymean/gaussian_rational.hpp"

namespace polymean {

/// Current exponent cap (default 64). Every stored exponent satisfies |pow| <= cap.
int degree_cap();
/// Replaces the exponent cap; throws ParameterError for cap < 1.
void set_degree_cap(int cap);

/// z^zPow * zbar^zbarPow * u^uPow * R^rPow * v^vPow.
///
/// z and zbar are independent commuting indeterminates. u = e^{i alpha} and
/// v = e^{i beta} lie on the unit circle, so their conjugates are stored as
/// negative exponents. R is the formal circumradius.
struct Monomial {
    int zPow = 0;
    int zbarPow = 0;
    int uPow = 0;
    int rPow = 0;
    int vPow = 0;

    /// True for monomials of the form z^a zbar^b.
    bool is_pure() const { return uPow == 0 && rPow == 0 && vPow == 0; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Throws ResourceError when an exponent exceeds the cap, DomainError when a
/// nonnegative-only exponent (z, zbar, R) is negative.
void check_monomial(const Monomial& m);

/// Sparse polynomial over Q(i) in z, zbar, u^{+-1}, R, v^{+-1}.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
class SymPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    SymPoly() = default;
    SymPoly(const GaussianRational& constant);  // NOLINT(google-explicit-constructor)
    SymPoly(long constant) : SymPoly(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)

    static SymPoly term(const Monomial& m, const GaussianRational& c = GaussianRational(1));
    static SymPoly z() { return term({1, 0, 0, 0, 0}); }
    static SymPoly zbar() { return term({0, 1, 0, 0, 0}); }
    static SymPoly u(int power = 1) { return term({0, 0, power, 0, 0}); }
    static SymPoly R(int power = 1) { return term({0, 0, 0, power, 0}); }
    static SymPoly v(int power = 1) { return term({0, 0, 0, 0, power}); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of m, zero when absent.
    GaussianRational coefficient(const Monomial& m) const;
    /// True when no term carries u, R or v.
    bool is_pure() const;

    /// Adds c * m in place, deleting the entry if it cancels.
    void add_term(const Monomial& m, const GaussianRational& c);

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const SymPoly& rhs);
    SymPoly& operator*=(const GaussianRational& scalar);

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(SymPoly a, const GaussianRational& s) { return a *= s; }
    friend SymPoly operator*(const GaussianRational& s, SymPoly a) { return a *= s; }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    /// Human-readable form, e.g. "z^2 + 2*z*zbar - (1+2i)*R^4*u^-1". Pure
    /// polynomials print in the expression grammar accepted by the parser.
    std::string str() const;

private:
    TermMap terms_;
};

SymPoly poly_add(const SymPoly& a, const SymPoly& b);
SymPoly poly_mul(const SymPoly& a, const SymPoly& b);
/// a^k by repeated squaring; throws ResourceError when the result would exceed the cap.
SymPoly poly_pow(const SymPoly& a, int k);

/// Formal d/dz: z^a zbar^b -> a z^{a-1} zbar^b, other indeterminates untouched.
SymPoly wirtinger_dz(const SymPoly& f);
/// Formal d/dzbar.
SymPoly wirtinger_dzbar(const SymPoly& f);
/// (d/dz)^dzOrder (d/dzbar)^dzbarOrder f.
SymPoly wirtinger(const SymPoly& f, int dzOrder, int dzbarOrder);

/// Numeric value with zbar = conj(z), u = e^{i alpha}, R = rValue, v = e^{i beta}.
/// Throws DomainError for rValue < 0.
std::complex<double> poly_eval(const SymPoly& f, std::complex<double> z, double alpha, double rValue,
                               double beta = 0.0);

/// Sets v := 1, merging terms that differ only in their v exponent.
SymPoly substitute_v_one(const SymPoly& f);

}  // namespace polymean
