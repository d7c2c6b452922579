#pragma once

namespace polymean {

/// Regular n-gon and the host-disk radius threshold.
struct DiskGeometry {
    int n = 3;
    double circumradius = 1.0;
    /// R cos(pi / n)
    double inradius = 0.0;
    /// sqrt(5R^2 + 4rR) for odd n, sqrt(8R^2 + R^4 / r^2) for even n.
    double rStar = 0.0;
    /// rStar / 2; the host disk must be strictly larger.
    double minDomainRadius = 0.0;
};

/// Throws ParameterError for n < 3 or a non-positive radius.
DiskGeometry r_star(int n, double circumradius);

}  // namespace polymean
