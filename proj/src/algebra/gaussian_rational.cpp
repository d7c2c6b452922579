#include "polymean/gaussian_rational.hpp"

#include "polymean/errors.hpp"

namespace polymean {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw DomainError("gaussian rational division by zero");
    const Rational n = rhs.norm();
    *this *= rhs.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    auto imag_part = [](const Rational& x) {
        const Rational a = x.abs();
        return a == Rational(1) ? std::string("i") : a.str() + "i";
    };
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag_part(im_);
    return "(" + re_.str() + (im_.sign() < 0 ? "-" : "+") + imag_part(im_) + ")";
}

}  // namespace polymean
