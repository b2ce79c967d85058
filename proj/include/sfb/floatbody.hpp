#pragma once

#include "sfb/quadrature.hpp"

namespace sfb {

// One cut-depth solve: the depth s with cut volume delta in direction theta.
struct CutDepth {
    double theta = 0.0;     // tangent direction angle at the pole
    double s = 0.0;         // spherical: support angle of the cut; euclidean: line offset
    double achieved = 0.0;  // cut volume at s
    int iterations = 0;
};

// Floating body K_[delta] as built on a direction grid: support samples
// h_i = tan s(v_i, delta) at the pole (body.region is SupportSampled), the
// per-direction solves, and the circumscribed halfplane-intersection
// polygon for dumps and clipping.
struct FloatingBodyResult {
    ChartBody body;
    std::vector<CutDepth> depths;
    Polygon2 polygon;
    double delta = 0.0;
};

struct EuclidFloatingResult {
    SupportSampled region;
    std::vector<CutDepth> depths;
    Polygon2 polygon;
    double delta = 0.0;
};

// Monotone bisection for the Euclidean convex floating body in the plane:
// the offset c with area(region cut by {x.d(theta) >= c}) = delta.
// delta must lie in (0, area(region)).
CutDepth euclid_cut_depth(const ConvexRegion& region, double theta, double delta);

EuclidFloatingResult euclid_floating_body(const ConvexRegion& region, double delta, int M = 512);

// Spherical cut depth at pole u, direction v: the unique s in
// (-h_u(K,-v), h_u(K,v)) with vol(K intersect S^+_{u,v,s}) = delta.
// Decreasing in s; bisection to |achieved - delta| <= max(1e-12, 1e-6 delta)
// within 60 iterations.
CutDepth spherical_cut_depth(const SphericalBody& K, const UnitVector& u, const Vec& v, double delta);

// K_[delta] = intersection over grid directions of the lower hemispheres
// S^-_{u,v_i,s_i}. delta in (0, vol(K)). Throws FloatingBodyEmpty when the
// intersection loses its interior and PoleNotInteriorOfFloat when u leaves
// the interior (some s_i <= 0).
FloatingBodyResult spherical_floating_body(const SphericalBody& K, const UnitVector& u, double delta,
                                           const DirectionGrid& grid = {});

// The point where the meridian through w exits K_[delta]: w must lie on
// bd K within 1e-8 (BoundaryPointMismatch).
UnitVector radial_boundary_point(const FloatingBodyResult& fb, const SphericalBody& K, const UnitVector& u,
                                 const UnitVector& w);

// Chart sandwich of the spherical floating body between Euclidean floating
// bodies of the chart image:
//   g_u(K)_[delta/cos^3 beta]  subset  g_u(K_[delta])  subset  g_u(K)_[delta/cos^3 alpha]
// for C_u(alpha) inside int K inside K inside C_u(beta). Verified by
// support comparison per grid direction.
struct SandwichReport {
    bool holds = false;
    double max_violation_inner = 0.0;  // how far the inner body pokes out
    double max_violation_outer = 0.0;  // how far the floating body pokes out
    double alpha = 0.0;
    double beta = 0.0;
};

SandwichReport sandwich_check(const SphericalBody& K, const UnitVector& u, double delta, double alpha,
                              double beta, const DirectionGrid& grid = {}, double tol = 1e-8);

}  // namespace sfb
