#include "polymean/geometry.hpp"

#include <cmath>
#include <numbers>

#include "polymean/errors.hpp"

namespace polymean {

DiskGeometry r_star(int n, double circumradius) {
    if (n < 3) throw ParameterError("polygon needs n >= 3");
    if (!(circumradius > 0.0)) throw ParameterError("circumradius must be positive");
    DiskGeometry g;
    g.n = n;
    g.circumradius = circumradius;
    const double R = circumradius;
    g.inradius = R * std::cos(std::numbers::pi / n);
    const double r = g.inradius;
    g.rStar = n % 2 == 1 ? std::sqrt(5.0 * R * R + 4.0 * r * R) : std::sqrt(8.0 * R * R + R * R * R * R / (r * r));
    g.minDomainRadius = g.rStar / 2.0;
    return g;
}

}  // namespace polymean
