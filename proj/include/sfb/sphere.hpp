#pragma once

#include <cmath>

#include "sfb/vec.hpp"

namespace sfb {

// Direction on S^n, renormalized on construction. Stays within 1e-12 of
// unit length by construction.
class UnitVector {
  public:
    UnitVector() : v_() {}
    explicit UnitVector(const Vec& v) : v_(v.normalized()) {}
    UnitVector(std::initializer_list<double> xs) : v_(Vec(xs).normalized()) {}

    const Vec& vec() const { return v_; }
    int dim() const { return v_.dim(); }
    double operator[](int i) const { return v_[i]; }
    double dot(const UnitVector& o) const { return v_.dot(o.v_); }
    double dot(const Vec& o) const { return v_.dot(o); }
    UnitVector operator-() const { return UnitVector(-v_); }

  private:
    Vec v_;
};

// Closed hemisphere keyed by its pole z: the set S^-_z = {w : z.w <= 0}.
// The complementary closed side {w : z.w >= 0} is S^+_z.
struct Hemisphere {
    UnitVector pole;

    bool lower_contains(const UnitVector& w, double tol = 0.0) const {
        return pole.dot(w) <= tol;
    }
    bool upper_contains(const UnitVector& w, double tol = 0.0) const {
        return pole.dot(w) >= -tol;
    }
};

// Geodesic ball C_u(alpha) = {w : d(center, w) <= radius}, radius in [0, pi/2].
struct Cap {
    UnitVector center;
    double radius = 0.0;
};

// d(u, v) = arccos(u.v) in [0, pi].
double geodesic_distance(const UnitVector& u, const UnitVector& v);

// w|S_v = (w - (v.w) v)/||w - (v.w) v||, the direction of w seen from v.
// Throws DegenerateProjection when w is within 1e-10 of +-v.
UnitVector project_to_hypersphere(const UnitVector& w, const UnitVector& v);

// Hemisphere S^+_{u,v,s} with pole z = cos(s) v - sin(s) u, so that
// w in S^+_{u,v,s}  iff  v.w >= tan(s) (u.w). Requires u ortho v within 1e-10
// and s in (-pi/2, pi/2).
Hemisphere oriented_hemisphere(const UnitVector& u, const UnitVector& v, double s);

// Deterministic orthonormal tangent basis at u (dim 3 only): picks the
// coordinate axis least aligned with u, Gram-Schmidts it, completes with
// the cross product. Chart coordinates are (t.a, t.b).
struct TangentFrame {
    UnitVector u;
    Vec a;
    Vec b;

    // Unit tangent direction at angle theta.
    Vec dir(double theta) const { return a * std::cos(theta) + b * std::sin(theta); }
};

TangentFrame tangent_frame(const UnitVector& u);

}  // namespace sfb
