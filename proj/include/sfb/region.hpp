#pragma once

#include <variant>
#include <vector>

#include "sfb/plane.hpp"

namespace sfb {

// Convex chart region given by uniform support samples: directions
// theta_i = 2 pi i / M, values h_i = h(theta_i) > 0 (origin interior).
// As a set it is the intersection of the M halfplanes {x.dir(theta_i) <= h_i};
// the envelope machinery below recovers smooth boundaries from the samples
// far more accurately than that polygon.
struct SupportSampled {
    std::vector<double> h;

    int M() const { return static_cast<int>(h.size()); }
    double theta(int i) const { return 2.0 * M_PI * i / M(); }
};

using ConvexRegion = std::variant<Polygon2, SupportSampled>;

// Boundary reconstruction from uniform support samples of a C^1 support
// function: x(theta) = h nu + h' tau with h' from 4th-order periodic
// central differences. Exact for constant h. Radial queries interpolate
// r(phi) with a monotone-guarded cubic Hermite in the polar angle.
class SupportEnvelope {
  public:
    explicit SupportEnvelope(const SupportSampled& s);

    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<Vec2>& points() const { return pts_; }
    const std::vector<Vec2>& normals() const { return nus_; }
    const std::vector<double>& hprime() const { return dh_; }

    // Radial function of the region at polar angle phi.
    double radial(double phi) const;

    // True when every support line is within tol of touching the sample hull
    // (the samples describe a body's support function, not a strict superset).
    double max_slack() const { return max_slack_; }

  private:
    std::vector<Vec2> pts_;
    std::vector<Vec2> nus_;
    std::vector<double> dh_;
    std::vector<double> phi_;  // unwrapped increasing polar angles
    std::vector<double> rad_;
    std::vector<double> drad_; // d rad / d phi at nodes
    double max_slack_ = 0.0;
};

// The halfplane-intersection polygon of a support-sampled region
// (circumscribed; O(M^-2) outside the true body for smooth bodies).
Polygon2 support_polygon(const SupportSampled& s);

// Support value of a region in direction d (unit).
double region_support(const ConvexRegion& r, const Vec2& d);

// Radial function of a region (origin must be interior).
double region_radial(const ConvexRegion& r, const Vec2& d);

bool region_contains(const ConvexRegion& r, const Vec2& p, double tol = 1e-12);

}  // namespace sfb
