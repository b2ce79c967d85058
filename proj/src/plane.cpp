#include "sfb/plane.hpp"

#include <algorithm>
#include <cmath>

namespace sfb {

double Polygon2::area() const {
    if (pts.size() < 3) return 0.0;
    double s = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % pts.size()];
        s += p.cross(q);
    }
    return 0.5 * s;
}

Vec2 Polygon2::centroid() const {
    double a6 = 0.0;
    Vec2 c{0.0, 0.0};
    for (size_t i = 0; i < pts.size(); ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % pts.size()];
        double w = p.cross(q);
        a6 += w;
        c = c + (p + q) * w;
    }
    if (std::abs(a6) < 1e-300) return pts.empty() ? Vec2{} : pts[0];
    return c * (1.0 / (3.0 * a6));
}

bool Polygon2::contains(const Vec2& p, double tol) const {
    if (pts.size() < 3) return false;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % pts.size()];
        if ((b - a).cross(p - a) < -tol) return false;
    }
    return true;
}

double Polygon2::support(const Vec2& d) const {
    double best = -1e300;
    for (const Vec2& p : pts) best = std::max(best, p.dot(d));
    return best;
}

double Polygon2::radial(const Vec2& d) const {
    require(contains({0.0, 0.0}, 1e-12), Errc::PoleNotInterior, "radial query needs origin inside polygon");
    double best = 1e300;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % pts.size()];
        // edge line {x : x.n = c} with outward n
        Vec2 e = b - a;
        Vec2 n{e.y, -e.x};
        double nn = n.norm();
        if (nn < 1e-300) continue;
        n = n * (1.0 / nn);
        double c = a.dot(n);
        double dn = d.dot(n);
        if (dn > 1e-15 && c > 0.0) best = std::min(best, c / dn);
    }
    return best;
}

Polygon2 convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) {
                              return std::abs(a.x - b.x) < 1e-14 && std::abs(a.y - b.y) < 1e-14;
                          }),
              pts.end());
    size_t n = pts.size();
    if (n < 3) return Polygon2{pts};
    std::vector<Vec2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && (h[k - 1] - h[k - 2]).cross(pts[i] - h[k - 2]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && (h[k - 1] - h[k - 2]).cross(pts[i] - h[k - 2]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return Polygon2{h};
}

Polygon2 clip_halfplane(const Polygon2& poly, const Vec2& n, double c) {
    Polygon2 out;
    size_t m = poly.pts.size();
    if (m == 0) return out;
    out.pts.reserve(m + 1);
    for (size_t i = 0; i < m; ++i) {
        const Vec2& a = poly.pts[i];
        const Vec2& b = poly.pts[(i + 1) % m];
        double da = a.dot(n) - c;
        double db = b.dot(n) - c;
        if (da <= 0.0) {
            out.pts.push_back(a);
            if (db > 0.0) out.pts.push_back(a + (b - a) * (da / (da - db)));
        } else if (db <= 0.0) {
            out.pts.push_back(a + (b - a) * (da / (da - db)));
        }
    }
    // drop duplicate vertices the crossing cases can produce
    Polygon2 dedup;
    for (const Vec2& p : out.pts) {
        if (dedup.pts.empty() || (p - dedup.pts.back()).norm() > 1e-13) dedup.pts.push_back(p);
    }
    while (dedup.pts.size() > 1 && (dedup.pts.front() - dedup.pts.back()).norm() <= 1e-13)
        dedup.pts.pop_back();
    return dedup;
}

double pairwise_sum(const std::vector<double>& xs) {
    // bottom-up cascade with a fixed pairing; identical results for
    // identical inputs independent of the caller's loop structure
    if (xs.empty()) return 0.0;
    std::vector<double> acc(xs);
    size_t n = acc.size();
    while (n > 1) {
        size_t half = n / 2;
        for (size_t i = 0; i < half; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
        if (n % 2 == 1) {
            acc[half] = acc[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return acc[0];
}

bool fit_circle(const std::vector<Vec2>& pts, Vec2* center, double* radius) {
    // Kasa algebraic fit: minimize sum (|p|^2 - 2 p.c - d)^2 over (c, d).
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, sz = 0, sxz = 0, syz = 0;
    double n = static_cast<double>(pts.size());
    for (const Vec2& p : pts) {
        double z = p.norm2();
        sx += p.x;
        sy += p.y;
        sxx += p.x * p.x;
        syy += p.y * p.y;
        sxy += p.x * p.y;
        sz += z;
        sxz += p.x * z;
        syz += p.y * z;
    }
    // normal equations for [2cx, 2cy, d]
    double a11 = sxx - sx * sx / n;
    double a12 = sxy - sx * sy / n;
    double a22 = syy - sy * sy / n;
    double b1 = 0.5 * (sxz - sx * sz / n);
    double b2 = 0.5 * (syz - sy * sz / n);
    double det = a11 * a22 - a12 * a12;
    double scale = std::max({std::abs(a11), std::abs(a22), 1e-300});
    if (std::abs(det) < 1e-14 * scale * scale) return false;
    double cx = (b1 * a22 - b2 * a12) / det;
    double cy = (b2 * a11 - b1 * a12) / det;
    double d = (sz - 2.0 * (cx * sx + cy * sy)) / n;
    double r2 = d + cx * cx + cy * cy;
    if (r2 <= 0.0) return false;
    *center = Vec2{cx, cy};
    *radius = std::sqrt(r2);
    return true;
}

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::next_double() {
    return (next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

}  // namespace sfb
