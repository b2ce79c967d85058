#include "sfb/sphere.hpp"

#include <algorithm>

namespace sfb {

double geodesic_distance(const UnitVector& u, const UnitVector& v) {
    double c = std::clamp(u.dot(v), -1.0, 1.0);
    return std::acos(c);
}

UnitVector project_to_hypersphere(const UnitVector& w, const UnitVector& v) {
    double c = v.dot(w);
    Vec t = w.vec() - v.vec() * c;
    require(t.norm() >= 1e-10, Errc::DegenerateProjection, "point coincides with +-v");
    return UnitVector(t);
}

Hemisphere oriented_hemisphere(const UnitVector& u, const UnitVector& v, double s) {
    require(std::abs(u.dot(v)) <= 1e-10, Errc::NotOrthogonal, "v must be tangent to u");
    require(s > -M_PI / 2 && s < M_PI / 2, Errc::AngleOutOfRange, "s must lie in (-pi/2, pi/2)");
    Vec z = v.vec() * std::cos(s) - u.vec() * std::sin(s);
    return Hemisphere{UnitVector(z)};
}

TangentFrame tangent_frame(const UnitVector& u) {
    require(u.dim() == 3, Errc::DimensionMismatch, "tangent frames are built for S^2");
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) < std::abs(u[k])) k = i;
    Vec a = Vec::axis(3, k);
    a = (a - u.vec() * u.dot(a)).normalized();
    Vec b = u.vec().cross(a);
    return TangentFrame{u, a, b};
}

}  // namespace sfb
