#pragma once

#include "sfb/plane.hpp"
#include "sfb/sphere.hpp"

namespace sfb {

// Gnomonic (central) projection at pole u and its Jacobians. Chart points
// are coordinates in the tangent frame at u; geodesics map to straight
// lines and convex bodies to convex regions.

struct ChartPoint {
    Vec2 x;  // coordinates in the pole's tangent frame
};

// Boundary sample carrying what the transfer formulas need.
struct BoundaryDatum {
    UnitVector w;        // boundary point on the sphere
    UnitVector normal;   // outer unit normal, tangent at w
    double curvature;    // Gauss-Kronecker curvature at w (n=2: geodesic curvature)
};

// g_u(v) = v/(u.v) - u. Requires u.v > 1e-10 (OutsideOpenHemisphere).
Vec2 gnomonic(const TangentFrame& f, const UnitVector& v);

// g_u^{-1}(x) = (x + u)/||x + u||.
UnitVector gnomonic_inv(const TangentFrame& f, const Vec2& x);

// Embed a chart vector into ambient R^3 (tangent component only).
Vec chart_embed(const TangentFrame& f, const Vec2& x);

// Volume Jacobian of g_u at v: 1/(u.v)^{n+1}.
double jac_volume(const UnitVector& u, const UnitVector& v);

// Volume Jacobian of g_u^{-1} at x: (1 + ||x||^2)^{-(n+1)/2}.
double jac_volume_inv(const Vec2& x, int n = 2);

// Boundary (n-1 dim) Jacobian of g_u restricted to bd K at w with outer
// normal N: sqrt(1 - (u.N)^2)/(u.w)^n.
double jac_boundary(const UnitVector& u, const UnitVector& w, const UnitVector& normal, int n = 2);

// Boundary Jacobian of g_u^{-1} at chart point x with chart outer normal nu:
// sqrt(1 + (x.nu)^2)/(1 + ||x||^2)^{n/2}.
double jac_boundary_inv(const Vec2& x, const Vec2& nu, int n = 2);

// Jacobian of the radial projection bd K -> S_u along meridians:
// (-u.N_w)/sin^n(d(u, w)). Requires w not at the pole (DegenerateRadial).
double jac_radial(const UnitVector& u, const UnitVector& w, const UnitVector& normal, int n = 2);

// Curvature transfer chart -> sphere at chart point x with chart outer
// normal nu and chart curvature H_chart:
//   H_sphere = H_chart * ((1 + ||x||^2)/(1 + (x.nu)^2))^{(n+1)/2}.
// nu must be unit within 1e-10; H_chart >= 0.
double curvature_pullback(double h_chart, const Vec2& x, const Vec2& nu, int n = 2);

// Differential of g_u at v applied to tangent X: X/(u.v) - (u.X) v/(u.v)^2,
// expressed in the chart frame. Used by tests against finite differences.
Vec2 gnomonic_differential(const TangentFrame& f, const UnitVector& v, const Vec& X);

}  // namespace sfb
