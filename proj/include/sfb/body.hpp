#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "sfb/chart.hpp"
#include "sfb/region.hpp"
#include "sfb/sphere.hpp"

namespace sfb {

// Convex bodies on S^2, all assumed radially convex and contained in an
// open hemisphere (checked or constructed that way per kind).

struct CapBody {
    Cap cap;
};

// Spherical polytope: vertices in convex position, counterclockwise as
// seen from outside the sphere, all strictly inside an open hemisphere.
struct PolytopeBody {
    std::vector<UnitVector> verts;
};

// Body given by its gnomonic image at a fixed admissible pole.
struct ChartBody {
    UnitVector pole;
    ConvexRegion region;
};

// Body given by closed-form oracles in its own chart. support_angle and
// chart_radial are required; boundary_data supplies the outer chart normal
// and chart curvature at the boundary point with polar angle phi (optional,
// discrete estimation kicks in when absent). breaks lists polar angles
// where the boundary is not smooth (corners), sorted ascending in [0, 2pi).
struct AnalyticBody {
    UnitVector pole;
    std::function<double(double)> support_angle;  // theta -> h_u(K, v(theta))
    std::function<double(double)> chart_radial;   // phi -> r(phi) > 0
    std::function<void(double, Vec2*, double*)> boundary_data;
    std::vector<double> breaks;
    std::function<AnalyticBody()> polar_maker;
};

using SphericalBody = std::variant<CapBody, PolytopeBody, ChartBody, AnalyticBody>;

// Centered chart-ellipse body: chart at `pole` is the ellipse with semi-axes
// a >= b > 0, major axis rotated by psi in the tangent frame. All oracles
// (support, radial, curvature, polar) are closed-form.
AnalyticBody make_ellipse_body(const UnitVector& pole, double a, double b, double psi = 0.0);

// Cap cut by closed hemispheres through its interior ("lune" bodies):
// chart at the cap's center is the disk intersected with halfplanes.
// Boundary is piecewise arc/segment with closed-form corners.
AnalyticBody make_lune_body(const Cap& cap, const std::vector<Hemisphere>& cuts);

// Spherical convex hull of points strictly inside a common open hemisphere.
// Throws NotProperlyContained when no such hemisphere exists.
PolytopeBody spherical_hull(const std::vector<UnitVector>& pts);

// Polar body K* = {v : v.w <= 0 for all w in K}. Closed form per kind:
// caps dualize to caps, polytopes to the polytope of edge poles, chart
// regions through the Euclidean polar of the chart image at the antipode.
SphericalBody polar(const SphericalBody& K);

// Support angle h_u(K, v) in (-pi/2, pi/2): the signed geodesic reach of K
// from u in tangent direction v. tan h_u(K, v) = euclidean support of the
// chart image of K at u. v must be tangent to u within 1e-10.
double support(const SphericalBody& K, const UnitVector& u, const Vec& v);

// Radial function rho_u(K, v): largest t with cos(t) u + sin(t) v in K.
// Requires u interior to K (DegenerateRadial otherwise).
double radial(const SphericalBody& K, const UnitVector& u, const Vec& v);

// Natural/validated pole: cap center, polytope interior direction (centroid
// with a deterministic search fallback), stored pole for chart/analytic
// bodies. Throws NoValidPole when the body admits none.
UnitVector find_pole(const SphericalBody& K);

// True when K contains no antipodal pair (tolerance 1e-10).
bool is_proper(const SphericalBody& K);

bool body_contains(const SphericalBody& K, const UnitVector& w, double tol = 1e-12);

// Inscribed M-gon chart polygon at the natural pole: boundary points at
// uniform chart polar angles. Used by refinement studies.
ChartBody discretize(const SphericalBody& K, int M);

// Chart polygon of the body at pole u (exact for polytopes and chart
// polygons; M-gon radial sampling for smooth bodies).
Polygon2 chart_polygon(const SphericalBody& K, const TangentFrame& f, int M = 512);

// Structural validation (convex position, orientation, ranges). Throws
// BadBodySpec with a field-level message.
void validate_body(const SphericalBody& K);

}  // namespace sfb
