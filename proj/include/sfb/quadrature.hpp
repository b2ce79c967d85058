#pragma once

#include <functional>

#include "sfb/body.hpp"

namespace sfb {

// M uniformly spaced tangent directions at a pole; weights sum to 2 pi.
struct DirectionGrid {
    int M = 512;

    double theta(int i) const { return 2.0 * M_PI * i / M; }
    double weight() const { return 2.0 * M_PI / M; }
};

struct QuadratureReport {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
};

// vol_2(K) by the radial cone formula at pole u:
//   vol = integral over S_u of (1 - cos rho_u(K, v)) dv.
// Exact (closed form) for caps, polytopes and chart polygons; support-
// envelope evaluation for sampled regions; per-piece Gauss panels for
// analytic bodies. u must be interior.
QuadratureReport body_volume(const SphericalBody& K, const UnitVector& u, const DirectionGrid& grid = {});

// vol_2(K intersect S^+_{u,v,s}), the part of K cut off by the oriented
// hemisphere. v tangent to u, s in (-pi/2, pi/2). Computed in the body's
// own chart, where the cutting hypersphere is a straight line.
QuadratureReport cut_volume(const SphericalBody& K, const UnitVector& u, const Vec& v, double s,
                            const DirectionGrid& grid = {});

// Subsphere for the Fubini decomposition on S^2: either a great circle
// S_axis (k = 1) or an antipodal point pair {p, -p} (k = 0).
struct Subsphere {
    enum Kind { GreatCircle, PointPair } kind = GreatCircle;
    UnitVector witness;  // the axis, or p
};

// integral over S^2 of f, split along the subsphere per the Fubini
// decomposition: great-circle case integrates meridians
//   int_{S_axis} int_0^pi sin(t) f(cos t axis + sin t v) dt dv,
// point-pair case integrates latitude bands over both hemispheres.
QuadratureReport integrate_split(const std::function<double(const UnitVector&)>& f, const Subsphere& S,
                                 const DirectionGrid& grid = {});

// vol_2(K) - vol_2(L) for L inside K, via the shared radial parametrization
//   sum_i w_i (cos rho_L(v_i) - cos rho_K(v_i)),
// which cancels the common bulk before summation. Sampled containment is
// verified (NotNested on violation beyond 1e-9).
QuadratureReport volume_difference(const SphericalBody& K, const SphericalBody& L, const UnitVector& u,
                                   const DirectionGrid& grid = {});

// Euclidean area of a chart region (exact for polygons, envelope-based for
// sampled regions).
double region_area(const ConvexRegion& r);

}  // namespace sfb
