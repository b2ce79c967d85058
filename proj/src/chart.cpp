#include "sfb/chart.hpp"

namespace sfb {

Vec2 gnomonic(const TangentFrame& f, const UnitVector& v) {
    double c = f.u.dot(v);
    require(c > 1e-10, Errc::OutsideOpenHemisphere, "point not in the open hemisphere of the pole");
    Vec g = v.vec() * (1.0 / c) - f.u.vec();
    return Vec2{g.dot(f.a), g.dot(f.b)};
}

UnitVector gnomonic_inv(const TangentFrame& f, const Vec2& x) {
    Vec w = f.u.vec() + f.a * x.x + f.b * x.y;
    return UnitVector(w);
}

Vec chart_embed(const TangentFrame& f, const Vec2& x) {
    return f.a * x.x + f.b * x.y;
}

double jac_volume(const UnitVector& u, const UnitVector& v) {
    double c = u.dot(v);
    require(c > 1e-10, Errc::OutsideOpenHemisphere, "point not in the open hemisphere of the pole");
    int n = u.dim() - 1;
    return 1.0 / std::pow(c, n + 1);
}

double jac_volume_inv(const Vec2& x, int n) {
    return std::pow(1.0 + x.norm2(), -(n + 1) * 0.5);
}

double jac_boundary(const UnitVector& u, const UnitVector& w, const UnitVector& normal, int n) {
    double c = u.dot(w);
    require(c > 1e-10, Errc::OutsideOpenHemisphere, "point not in the open hemisphere of the pole");
    double un = u.dot(normal);
    double t = std::max(0.0, 1.0 - un * un);
    return std::sqrt(t) / std::pow(c, n);
}

double jac_boundary_inv(const Vec2& x, const Vec2& nu, int n) {
    double xn = x.dot(nu);
    return std::sqrt(1.0 + xn * xn) / std::pow(1.0 + x.norm2(), n * 0.5);
}

double jac_radial(const UnitVector& u, const UnitVector& w, const UnitVector& normal, int n) {
    double sd = std::sin(geodesic_distance(u, w));
    require(sd > 1e-10, Errc::DegenerateRadial, "boundary point at the pole");
    return (-u.dot(normal)) / std::pow(sd, n);
}

double curvature_pullback(double h_chart, const Vec2& x, const Vec2& nu, int n) {
    require(std::abs(nu.norm() - 1.0) <= 1e-10, Errc::ZeroVector, "chart normal must be unit");
    require(h_chart >= 0.0, Errc::ZeroCurvaturePoint, "chart curvature must be nonnegative");
    double xn = x.dot(nu);
    double f = (1.0 + x.norm2()) / (1.0 + xn * xn);
    return h_chart * std::pow(f, (n + 1) * 0.5);
}

Vec2 gnomonic_differential(const TangentFrame& f, const UnitVector& v, const Vec& X) {
    double c = f.u.dot(v);
    require(c > 1e-10, Errc::OutsideOpenHemisphere, "point not in the open hemisphere of the pole");
    double uX = f.u.dot(X);
    Vec d = X * (1.0 / c) - v.vec() * (uX / (c * c));
    return Vec2{d.dot(f.a), d.dot(f.b)};
}

}  // namespace sfb
