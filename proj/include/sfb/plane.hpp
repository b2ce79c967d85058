#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sfb/errors.hpp"

namespace sfb {

// 2-d helpers for the gnomonic chart plane.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double t) const { return {x * t, y * t}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 dir2(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Convex polygon, counterclockwise, no repeated vertices.
struct Polygon2 {
    std::vector<Vec2> pts;

    bool empty() const { return pts.size() < 3; }
    double area() const;  // shoelace, exact up to rounding
    Vec2 centroid() const;
    bool contains(const Vec2& p, double tol = 1e-12) const;
    // Support value max x.d over vertices; d need not be unit.
    double support(const Vec2& d) const;
    // Radial function: largest r with r*d inside, d unit, origin interior.
    double radial(const Vec2& d) const;
};

// Convex hull (Andrew monotone chain), counterclockwise, collinear points
// dropped with tolerance 1e-12.
Polygon2 convex_hull(std::vector<Vec2> pts);

// Sutherland-Hodgman clip of a convex polygon by the halfplane {x.n <= c}.
Polygon2 clip_halfplane(const Polygon2& poly, const Vec2& n, double c);

// Pairwise (cascade) summation: fixed order, independent of chunking used
// by callers, so results are reproducible bit-for-bit.
double pairwise_sum(const std::vector<double>& xs);

// Least-squares circle through >= 3 points (Kasa fit). Returns false when
// the points are collinear within tolerance; center/radius untouched then.
bool fit_circle(const std::vector<Vec2>& pts, Vec2* center, double* radius);

// Deterministic 64-bit RNG (splitmix64) used by sampled tests and the CLI.
// Not std::mt19937_64 so the stream is pinned across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_double();            // uniform [0, 1)
    double next_normal();            // standard normal (Box-Muller)

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sfb
