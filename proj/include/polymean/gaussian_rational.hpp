#pragma once

#include <complex>
#include <string>

#include "polymean/rational.hpp"

namespace polymean {

/// Element re + i*im of Q(i). Both parts are canonical rationals, so equality is structural.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    /// |x|^2 as an exact rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    /// Throws DomainError on division by zero.
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// Renders "3", "-1/2", "2i", "-i", "(1+2i)", "(-1/3-i)".
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

}  // namespace polymean
