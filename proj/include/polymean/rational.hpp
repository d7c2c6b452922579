#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polymean {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value);  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& integer);
    /// Throws ParameterError when the denominator is zero.
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Parses "p" or "p/q" with optional leading sign.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const;

private:
    mpq_class value_{0};
};

}  // namespace polymean
