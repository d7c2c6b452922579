#include "polymean/sym_poly.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ranges>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

std::atomic<int> g_degree_cap{64};

std::complex<double> ipow(std::complex<double> base, int k) {
    std::complex<double> result(1.0, 0.0);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

void append_factor(std::string& out, const char* name, int power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (power != 1) out += '^' + std::to_string(power);
}

}  // namespace

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int cap) {
    if (cap < 1) throw ParameterError("degree cap must be at least 1");
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.zPow + b.zPow, a.zbarPow + b.zbarPow, a.uPow + b.uPow, a.rPow + b.rPow, a.vPow + b.vPow};
}

void check_monomial(const Monomial& m) {
    if (m.zPow < 0 || m.zbarPow < 0 || m.rPow < 0) {
        throw DomainError("negative power of z, zbar or R");
    }
    const int cap = degree_cap();
    if (m.zPow > cap || m.zbarPow > cap || m.rPow > cap || std::abs(m.uPow) > cap || std::abs(m.vPow) > cap) {
        throw ResourceError("exponent exceeds degree cap " + std::to_string(cap));
    }
}

SymPoly::SymPoly(const GaussianRational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

SymPoly SymPoly::term(const Monomial& m, const GaussianRational& c) {
    SymPoly p;
    p.add_term(m, c);
    return p;
}

GaussianRational SymPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool SymPoly::is_pure() const {
    for (const auto& [m, c] : terms_) {
        if (!m.is_pure()) return false;
    }
    return true;
}

void SymPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    check_monomial(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymPoly SymPoly::operator-() const {
    SymPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

SymPoly& SymPoly::operator*=(const GaussianRational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, coeff] : std::views::reverse(terms_)) {
        const Rational& lead = coeff.re().is_zero() ? coeff.im() : coeff.re();
        const bool negative = lead.sign() < 0;
        const GaussianRational c = negative ? -coeff : coeff;

        std::string factors;
        append_factor(factors, "z", m.zPow);
        append_factor(factors, "zbar", m.zbarPow);
        append_factor(factors, "R", m.rPow);
        append_factor(factors, "u", m.uPow);
        append_factor(factors, "v", m.vPow);

        std::string body;
        if (factors.empty()) {
            body = c.str();
        } else if (c == GaussianRational(1)) {
            body = factors;
        } else {
            body = c.str() + "*" + factors;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

SymPoly poly_add(const SymPoly& a, const SymPoly& b) { return a + b; }

SymPoly poly_mul(const SymPoly& a, const SymPoly& b) { return a * b; }

SymPoly poly_pow(const SymPoly& a, int k) {
    if (k < 0) throw DomainError("negative polynomial power");
    SymPoly result(1);
    SymPoly base = a;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

SymPoly wirtinger_dz(const SymPoly& f) {
    SymPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.zPow == 0) continue;
        Monomial d = m;
        --d.zPow;
        r.add_term(d, c * GaussianRational(m.zPow));
    }
    return r;
}

SymPoly wirtinger_dzbar(const SymPoly& f) {
    SymPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.zbarPow == 0) continue;
        Monomial d = m;
        --d.zbarPow;
        r.add_term(d, c * GaussianRational(m.zbarPow));
    }
    return r;
}

SymPoly wirtinger(const SymPoly& f, int dzOrder, int dzbarOrder) {
    if (dzOrder < 0 || dzbarOrder < 0) throw DomainError("negative derivative order");
    SymPoly r = f;
    for (int i = 0; i < dzbarOrder && !r.is_zero(); ++i) r = wirtinger_dzbar(r);
    for (int i = 0; i < dzOrder && !r.is_zero(); ++i) r = wirtinger_dz(r);
    return r;
}

std::complex<double> poly_eval(const SymPoly& f, std::complex<double> z, double alpha, double rValue,
                               double beta) {
    if (rValue < 0.0) throw DomainError("R must be nonnegative");
    const std::complex<double> zb = std::conj(z);
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> t = c.to_complex() * ipow(z, m.zPow) * ipow(zb, m.zbarPow);
        if (m.uPow != 0) t *= std::polar(1.0, m.uPow * alpha);
        if (m.vPow != 0) t *= std::polar(1.0, m.vPow * beta);
        if (m.rPow != 0) t *= std::pow(rValue, m.rPow);
        sum += t;
    }
    return sum;
}

SymPoly substitute_v_one(const SymPoly& f) {
    SymPoly r;
    for (const auto& [m, c] : f.terms()) {
        Monomial w = m;
        w.vPow = 0;
        r.add_term(w, c);
    }
    return r;
}

}  // namespace polymean
