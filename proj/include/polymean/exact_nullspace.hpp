#pragma once

#include <cstddef>
#include <vector>

#include "polymean/gaussian_rational.hpp"

namespace polymean {

/// Dense row-major matrix over Q(i).
struct GaussianMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GaussianRational> data;

    GaussianMatrix() = default;
    GaussianMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    GaussianRational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct NullspaceResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivotColumns;
    /// One vector per free column; the free coordinate is 1, the other free ones 0.
    std::vector<std::vector<GaussianRational>> basis;
};

/// Exact nullspace by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to Gaussian integers; every elimination step divides
/// exactly by the previous pivot, so intermediate entries stay in Z[i].
NullspaceResult exact_nullspace(const GaussianMatrix& m);

/// Product M x, exact.
std::vector<GaussianRational> multiply(const GaussianMatrix& m, const std::vector<GaussianRational>& x);

}  // namespace polymean
