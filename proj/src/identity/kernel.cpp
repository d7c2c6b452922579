#include "polymean/kernel.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "polymean/errors.hpp"
#include "polymean/exact_nullspace.hpp"
#include "polymean/identity_engine.hpp"

namespace polymean {

namespace {

std::size_t rank_of(const std::vector<std::vector<GaussianRational>>& vectors, std::size_t width) {
    GaussianMatrix m(vectors.size(), width);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) m.at(r, c) = vectors[r][c];
    }
    return exact_nullspace(m).rank;
}

}  // namespace

KernelReport kernel_basis(const ProblemParams& params, int K, int L, const KernelLimits& limits) {
    const int cap = degree_cap();
    if (K < 0 || L < 0 || K > cap || L > cap) {
        throw ParameterError("degree bounds must satisfy 0 <= K, L <= " + std::to_string(cap));
    }
    const std::size_t cols = static_cast<std::size_t>(K + 1) * static_cast<std::size_t>(L + 1);
    if (cols > limits.maxCols) {
        throw ResourceError("kernel grid has " + std::to_string(cols) + " columns, limit " +
                            std::to_string(limits.maxCols));
    }

    std::vector<std::pair<int, int>> grid;
    std::vector<SymPoly> images;
    std::map<Monomial, std::size_t> rowIndex;
    for (int a = 0; a <= K; ++a) {
        for (int b = 0; b <= L; ++b) {
            grid.emplace_back(a, b);
            images.push_back(residual(SymPoly::term(Monomial{a, b, 0, 0, 0}), params));
            for (const auto& [mono, c] : images.back().terms()) rowIndex.try_emplace(mono, 0);
        }
    }
    if (rowIndex.size() > limits.maxRows) {
        throw ResourceError("kernel matrix has " + std::to_string(rowIndex.size()) + " rows, limit " +
                            std::to_string(limits.maxRows));
    }
    std::size_t next = 0;
    for (auto& [mono, idx] : rowIndex) idx = next++;

    GaussianMatrix matrix(rowIndex.size(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [mono, coeff] : images[c].terms()) matrix.at(rowIndex.at(mono), c) = coeff;
    }
    const NullspaceResult ns = exact_nullspace(matrix);

    KernelReport report(params);
    report.degreeBoundZ = K;
    report.degreeBoundZbar = L;
    report.gridDimension = cols;
    report.kernelDimension = ns.basis.size();
    report.form2Dimension = static_cast<std::size_t>(params.h() + 1) * static_cast<std::size_t>(params.m());

    auto to_poly = [&](const std::vector<GaussianRational>& x) {
        SymPoly p;
        for (std::size_t c = 0; c < cols; ++c) p.add_term(Monomial{grid[c].first, grid[c].second, 0, 0, 0}, x[c]);
        return p;
    };
    for (const auto& x : ns.basis) {
        SymPoly p = to_poly(x);
        if (!residual(p, params).is_zero()) throw std::logic_error("kernel basis element with nonzero residual");
        report.kernelBasis.push_back(std::move(p));
    }

    std::vector<bool> admissible(cols, false);
    report.form2Contained = true;
    for (std::size_t c = 0; c < cols; ++c) {
        const auto [a, b] = grid[c];
        if (a <= params.h() && b <= params.m() - 1) {
            admissible[c] = true;
            ++report.form2GridDimension;
            if (!images[c].is_zero()) report.form2Contained = false;
        }
    }

    // Keep kernel vectors whose components off the admissible span are independent.
    std::vector<std::vector<GaussianRational>> projected;
    for (std::size_t k = 0; k < ns.basis.size(); ++k) {
        std::vector<GaussianRational> off = ns.basis[k];
        bool any = false;
        for (std::size_t c = 0; c < cols; ++c) {
            if (admissible[c]) off[c] = GaussianRational();
            any = any || !off[c].is_zero();
        }
        if (!any) continue;
        projected.push_back(std::move(off));
        if (rank_of(projected, cols) == projected.size()) {
            report.extraElements.push_back(report.kernelBasis[k]);
        } else {
            projected.pop_back();
        }
    }
    return report;
}

Adjudication adjudicate(const ProblemParams& params, int K, int L, const KernelLimits& limits) {
    Adjudication adj(kernel_basis(params, K, L, limits));
    const KernelReport& r = adj.report;
    adj.necessityDiscrepancy = !r.extraElements.empty();
    const std::string extras = std::to_string(r.extraElements.size()) + " extra kernel element" +
                               (r.extraElements.size() == 1 ? "" : "s");
    if (!r.form2Contained) {
        adj.relation = KernelRelation::Differs;
        adj.summary = "kernel differs from admissible-form span: some admissible monomials have nonzero residual; " +
                      extras;
    } else if (r.kernelDimension == r.form2GridDimension) {
        adj.relation = KernelRelation::Equal;
        adj.summary = "kernel = admissible-form span on this grid";
    } else {
        adj.relation = KernelRelation::StrictlyContains;
        adj.summary = "admissible-form span strictly contained; " + extras;
    }
    if (adj.necessityDiscrepancy) {
        adj.summary += "; necessity discrepancy: kernel contains polynomials not of admissible form";
    }
    return adj;
}

}  // namespace polymean
