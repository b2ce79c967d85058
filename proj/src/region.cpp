#include "sfb/region.hpp"

#include <algorithm>
#include <cmath>

namespace sfb {

namespace {

double wrap_2pi(double a) {
    double t = std::fmod(a, 2.0 * M_PI);
    if (t < 0) t += 2.0 * M_PI;
    return t;
}

}  // namespace

SupportEnvelope::SupportEnvelope(const SupportSampled& s) {
    int M = s.M();
    require(M >= 8, Errc::PoleNotInterior, "support sampling needs at least 8 directions");
    double dtheta = 2.0 * M_PI / M;
    pts_.resize(M);
    nus_.resize(M);
    dh_.resize(M);
    for (int i = 0; i < M; ++i) {
        require(s.h[i] > 0.0, Errc::PoleNotInterior, "support samples must be positive (origin interior)");
    }
    auto at = [&](int i) { return s.h[((i % M) + M) % M]; };
    for (int i = 0; i < M; ++i) {
        // 4th-order periodic central difference of the support samples
        dh_[i] = (8.0 * (at(i + 1) - at(i - 1)) - (at(i + 2) - at(i - 2))) / (12.0 * dtheta);
        double th = s.theta(i);
        Vec2 nu = dir2(th);
        Vec2 tau{-nu.y, nu.x};
        nus_[i] = nu;
        pts_[i] = nu * s.h[i] + tau * dh_[i];
    }
    // polar-angle table, unwrapped to one increasing period
    phi_.resize(M + 1);
    rad_.resize(M + 1);
    double prev = pts_[0].angle();
    phi_[0] = prev;
    rad_[0] = pts_[0].norm();
    for (int i = 1; i < M; ++i) {
        double a = pts_[i].angle();
        while (a < prev) a += 2.0 * M_PI;
        if (a - prev > M_PI) a -= 2.0 * M_PI;  // guard against spurious wraps
        if (a <= prev) a = prev + 1e-15;       // stalls at support corners
        phi_[i] = a;
        rad_[i] = pts_[i].norm();
        prev = a;
    }
    phi_[M] = phi_[0] + 2.0 * M_PI;
    rad_[M] = rad_[0];
    require(phi_[M] > phi_[M - 1], Errc::PoleNotInterior, "envelope polar angles failed to wind once");

    drad_.resize(M + 1);
    for (int i = 0; i <= M; ++i) {
        int a = (i == 0) ? M - 1 : i - 1;
        int b = (i == M) ? 1 : i + 1;
        double dphi = phi_[b] - phi_[a];
        if (i == 0) dphi = (phi_[1] - phi_[0]) + (phi_[M] - phi_[M - 1]);
        if (i == M) dphi = (phi_[M] - phi_[M - 1]) + (phi_[1] - phi_[0]);
        double drad = rad_[b] - rad_[a];
        drad_[i] = (dphi > 1e-14) ? drad / dphi : 0.0;
    }

    for (int i = 0; i < M; ++i) {
        int j = (i + 1) % M;
        double slack = pts_[i].dot(nus_[j]) - s.h[j];
        max_slack_ = std::max(max_slack_, slack);
    }
}

double SupportEnvelope::radial(double phi) const {
    int M = static_cast<int>(pts_.size());
    double p = phi;
    while (p < phi_[0]) p += 2.0 * M_PI;
    while (p >= phi_[0] + 2.0 * M_PI) p -= 2.0 * M_PI;
    auto it = std::upper_bound(phi_.begin(), phi_.end(), p);
    int j = std::max(0, static_cast<int>(it - phi_.begin()) - 1);
    j = std::min(j, M - 1);
    double t0 = phi_[j], t1 = phi_[j + 1];
    double w = t1 - t0;
    if (w <= 1e-14) return rad_[j];
    double t = (p - t0) / w;
    // cubic Hermite in phi
    double r0 = rad_[j], r1 = rad_[j + 1];
    double m0 = drad_[j] * w, m1 = drad_[j + 1] * w;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * r0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * r1 + (t3 - t2) * m1;
}

Polygon2 support_polygon(const SupportSampled& s) {
    int M = s.M();
    double hmax = *std::max_element(s.h.begin(), s.h.end());
    double B = 4.0 * hmax + 1.0;
    Polygon2 poly{{{B, B}, {-B, B}, {-B, -B}, {B, -B}}};
    for (int i = 0; i < M; ++i) {
        poly = clip_halfplane(poly, dir2(s.theta(i)), s.h[i]);
        if (poly.empty()) break;
    }
    return poly;
}

double region_support(const ConvexRegion& r, const Vec2& d) {
    if (const auto* poly = std::get_if<Polygon2>(&r)) return poly->support(d);
    const auto& s = std::get<SupportSampled>(r);
    // exact for sample directions; halfplane-intersection corners otherwise
    double th = wrap_2pi(d.angle());
    double step = 2.0 * M_PI / s.M();
    double k = th / step;
    int i = static_cast<int>(std::lround(k));
    if (std::abs(k - i) * step < 1e-13) return s.h[i % s.M()];
    return support_polygon(s).support(d);
}

double region_radial(const ConvexRegion& r, const Vec2& d) {
    if (const auto* poly = std::get_if<Polygon2>(&r)) return poly->radial(d);
    // envelope reconstruction: accurate boundary of the sampled body
    SupportEnvelope env(std::get<SupportSampled>(r));
    return env.radial(d.angle());
}

bool region_contains(const ConvexRegion& r, const Vec2& p, double tol) {
    if (const auto* poly = std::get_if<Polygon2>(&r)) return poly->contains(p, tol);
    const auto& s = std::get<SupportSampled>(r);
    for (int i = 0; i < s.M(); ++i) {
        if (p.dot(dir2(s.theta(i))) > s.h[i] + tol) return false;
    }
    return true;
}

}  // namespace sfb
