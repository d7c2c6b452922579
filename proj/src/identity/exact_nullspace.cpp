#include "polymean/exact_nullspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "polymean/errors.hpp"

namespace polymean {

namespace {

// Element of Z[i].
struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b, required to be exact in Z[i].
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    const mpz_class norm = b.re * b.re + b.im * b.im;
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), norm.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), norm.get_mpz_t())) {
        throw std::logic_error("fraction-free elimination produced an inexact division");
    }
    mpz_class qre;
    mpz_class qim;
    mpz_divexact(qre.get_mpz_t(), re.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(qim.get_mpz_t(), im.get_mpz_t(), norm.get_mpz_t());
    return {qre, qim};
}

GaussianRational to_rational(const GaussInt& x) { return {Rational(x.re), Rational(x.im)}; }

}  // namespace

NullspaceResult exact_nullspace(const GaussianMatrix& m) {
    const std::size_t rows = m.rows;
    const std::size_t cols = m.cols;

    std::vector<GaussInt> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = m.at(r, c);
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.re().denominator().get_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.im().denominator().get_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = m.at(r, c);
            a[r * cols + c] = {x.re().numerator() * (scale / x.re().denominator()),
                               x.im().numerator() * (scale / x.im().denominator())};
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> GaussInt& { return a[r * cols + c]; };

    NullspaceResult result;
    GaussInt prev{1, 0};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const GaussInt p = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const GaussInt lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                at(i, j) = exact_div(sub(mul(p, at(i, j)), mul(lead, at(rank, j))), prev);
            }
            at(i, c) = GaussInt{0, 0};
        }
        prev = p;
        result.pivotColumns.push_back(c);
        ++rank;
    }
    result.rank = rank;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : result.pivotColumns) is_pivot[c] = true;

    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (is_pivot[freeCol]) continue;
        std::vector<GaussianRational> x(cols);
        x[freeCol] = GaussianRational(1);
        for (std::size_t k = rank; k-- > 0;) {
            const std::size_t pc = result.pivotColumns[k];
            GaussianRational sum;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (x[j].is_zero() || at(k, j).is_zero()) continue;
                sum += to_rational(at(k, j)) * x[j];
            }
            x[pc] = -sum / to_rational(at(k, pc));
        }
        result.basis.push_back(std::move(x));
    }
    return result;
}

std::vector<GaussianRational> multiply(const GaussianMatrix& m, const std::vector<GaussianRational>& x) {
    if (x.size() != m.cols) throw ParameterError("matrix-vector dimension mismatch");
    std::vector<GaussianRational> y(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (!m.at(r, c).is_zero() && !x[c].is_zero()) y[r] += m.at(r, c) * x[c];
        }
    }
    return y;
}

}  // namespace polymean
