#include "polymean/problem_params.hpp"

#include <algorithm>

#include "polymean/errors.hpp"

namespace polymean {

ProblemParams ProblemParams::create(int n, int m, int s, int h) {
    if (n < 3) throw ParameterError("constraint n >= 3 violated (n = " + std::to_string(n) + ")");
    if (m < 1) throw ParameterError("constraint m >= 1 violated (m = " + std::to_string(m) + ")");
    if (s < 0 || s > m - 1) {
        throw ParameterError("constraint 0 <= s <= m-1 violated (s = " + std::to_string(s) +
                             ", m = " + std::to_string(m) + ")");
    }
    if (h < 0 || h >= n - s) {
        throw ParameterError("constraint 0 <= h < n-s violated (h = " + std::to_string(h) +
                             ", n - s = " + std::to_string(n - s) + ")");
    }
    return {n, m, s, h, std::min(h + s, m - 1)};
}

std::string ProblemParams::str() const {
    return "(n=" + std::to_string(n_) + ", m=" + std::to_string(m_) + ", s=" + std::to_string(s_) +
           ", h=" + std::to_string(h_) + ", q=" + std::to_string(q_) + ")";
}

}  // namespace polymean
