#pragma once

#include <string>

namespace polymean {

/// Validated tuple (n, m, s, h) with q = min(h + s, m - 1).
///
/// n is the vertex count of the regular polygon, s the vertex weight power,
/// h and m - 1 the z and zbar degree bounds of the admissible form.
class ProblemParams {
public:
    /// Throws ParameterError naming the first violated constraint among
    /// n >= 3, m >= 1, 0 <= s <= m-1, 0 <= h < n-s.
    static ProblemParams create(int n, int m, int s, int h);

    int n() const { return n_; }
    int m() const { return m_; }
    int s() const { return s_; }
    int h() const { return h_; }
    int q() const { return q_; }

    std::string str() const;

    friend bool operator==(const ProblemParams&, const ProblemParams&) = default;

private:
    ProblemParams(int n, int m, int s, int h, int q) : n_(n), m_(m), s_(s), h_(h), q_(q) {}

    int n_;
    int m_;
    int s_;
    int h_;
    int q_;
};

inline ProblemParams params_new(int n, int m, int s, int h) { return ProblemParams::create(n, m, s, h); }

}  // namespace polymean
