#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polymean/problem_params.hpp"
#include "polymean/sym_poly.hpp"

namespace polymean {

struct KernelLimits {
    std::size_t maxRows = 4096;
    std::size_t maxCols = 4096;
};

/// Nullspace of f -> residual(f) on span{z^a zbar^b : a <= K, b <= L}.
struct KernelReport {
    explicit KernelReport(const ProblemParams& p) : params(p) {}

    ProblemParams params;
    int degreeBoundZ = 0;
    int degreeBoundZbar = 0;
    std::size_t gridDimension = 0;
    std::size_t kernelDimension = 0;
    std::vector<SymPoly> kernelBasis;
    /// (h + 1) * m, the dimension of the full admissible-form span.
    std::size_t form2Dimension = 0;
    /// Admissible monomials that fit inside the grid.
    std::size_t form2GridDimension = 0;
    bool form2Contained = false;
    /// Kernel members whose parts outside the admissible span are independent.
    std::vector<SymPoly> extraElements;
};

/// Throws ParameterError for negative or over-cap bounds, ResourceError when
/// the coefficient matrix exceeds the limits.
KernelReport kernel_basis(const ProblemParams& params, int K, int L, const KernelLimits& limits = {});

enum class KernelRelation { Equal, StrictlyContains, Differs };

struct Adjudication {
    explicit Adjudication(KernelReport r) : report(std::move(r)) {}

    KernelReport report;
    KernelRelation relation = KernelRelation::Differs;
    /// Kernel has elements that are not of admissible form.
    bool necessityDiscrepancy = false;
    std::string summary;
};

Adjudication adjudicate(const ProblemParams& params, int K, int L, const KernelLimits& limits = {});

}  // namespace polymean
