#include "sfb/body.hpp"

#include <algorithm>
#include <cmath>

namespace sfb {

namespace {

constexpr double kHalfPi = M_PI / 2;

// Outward great-circle poles of the edges of a CCW spherical polygon:
// z_i = -normalize(w_i x w_{i+1}); the body is the intersection of the
// lower hemispheres S^-_{z_i}.
std::vector<UnitVector> edge_poles(const std::vector<UnitVector>& verts) {
    std::vector<UnitVector> zs;
    size_t m = verts.size();
    zs.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        Vec c = verts[i].vec().cross(verts[(i + 1) % m].vec());
        require(c.norm() > 1e-12, Errc::BadBodySpec, "polytope has a degenerate edge");
        zs.push_back(UnitVector(-c));
    }
    return zs;
}

void check_cap_admissible(const Cap& cap, const UnitVector& u) {
    double d = geodesic_distance(u, cap.center);
    require(d + cap.radius < kHalfPi - 1e-9, Errc::BodyNotInOpenHemisphere,
            "cap is not strictly inside the open hemisphere of the pole");
}

double cap_support_angle(const Cap& cap, const UnitVector& u, const Vec& v) {
    check_cap_admissible(cap, u);
    double g = u.dot(cap.cent_vec());
    double vc = v.dot(cap.center.vec());
    double C = std::hypot(g, vc);
    double h = std::asin(std::clamp(std::sin(cap.radius) / C, -1.0, 1.0)) - std::atan2(-vc, g);
    return h;
}

double cap_radial_angle(const Cap& cap, const UnitVector& u, const Vec& v) {
    double g = u.dot(cap.center);
    double vc = v.dot(cap.center.vec());
    require(std::acos(std::clamp(g, -1.0, 1.0)) < cap.radius - 1e-12, Errc::DegenerateRadial,
            "pole is not interior to the cap");
    double C = std::hypot(g, vc);
    double psi = std::atan2(vc, g);
    return psi + std::acos(std::clamp(std::cos(cap.radius) / C, -1.0, 1.0));
}

// Deterministic search for a direction with margin min_j u.p_j as large as
// practical. Subgradient ascent on the sphere from several starts.
bool open_hemisphere_direction(const std::vector<UnitVector>& pts, UnitVector* out) {
    auto margin = [&](const Vec& u) {
        double m = 1e300;
        for (const auto& p : pts) m = std::min(m, u.dot(p.vec()));
        return m;
    };
    std::vector<Vec> starts;
    Vec c = Vec::zero(3);
    for (const auto& p : pts) c += p.vec();
    if (c.norm() > 1e-12) starts.push_back(c.normalized());
    for (int k = 0; k < 3; ++k) {
        starts.push_back(Vec::axis(3, k));
        starts.push_back(-Vec::axis(3, k));
    }
    Vec best = starts[0];
    double best_m = margin(best);
    for (Vec u : starts) {
        for (int it = 1; it <= 2000; ++it) {
            double m = 1e300;
            const UnitVector* worst = nullptr;
            for (const auto& p : pts) {
                double d = u.dot(p.vec());
                if (d < m) {
                    m = d;
                    worst = &p;
                }
            }
            if (m > 0.5) break;
            u = (u + worst->vec() * (1.0 / it)).normalized();
        }
        double m = margin(u);
        if (m > best_m) {
            best_m = m;
            best = u;
        }
    }
    if (best_m <= 1e-10) return false;
    *out = UnitVector(best);
    return true;
}

std::vector<UnitVector> region_boundary_on_sphere(const ChartBody& K) {
    TangentFrame f = tangent_frame(K.pole);
    std::vector<UnitVector> verts;
    if (const auto* poly = std::get_if<Polygon2>(&K.region)) {
        for (const Vec2& p : poly->pts) verts.push_back(gnomonic_inv(f, p));
    } else {
        SupportEnvelope env(std::get<SupportSampled>(K.region));
        for (const Vec2& p : env.points()) verts.push_back(gnomonic_inv(f, p));
    }
    return verts;
}

double max_over_sphere_points(const std::vector<UnitVector>& pts, const UnitVector& u, const Vec& v) {
    double best = -1e300;
    for (const auto& w : pts) {
        require(u.dot(w) > 1e-10, Errc::BodyNotInOpenHemisphere,
                "body leaves the open hemisphere of the pole");
        best = std::max(best, std::atan2(v.dot(w.vec()), u.dot(w)));
    }
    return best;
}

// Support maximization over an analytic boundary: coarse scan plus golden
// refinement. The objective is piecewise-smooth with isolated corners.
double analytic_support_from(const AnalyticBody& K, const UnitVector& u, const Vec& v) {
    TangentFrame f = tangent_frame(K.pole);
    auto value = [&](double phi) {
        Vec2 x = dir2(phi) * K.chart_radial(phi);
        UnitVector w = gnomonic_inv(f, x);
        require(u.dot(w) > 1e-10, Errc::BodyNotInOpenHemisphere,
                "body leaves the open hemisphere of the pole");
        return std::atan2(v.dot(w.vec()), u.dot(w));
    };
    const int N = 2048;
    double best = -1e300, best_phi = 0.0;
    for (int i = 0; i < N; ++i) {
        double phi = 2.0 * M_PI * i / N;
        double val = value(phi);
        if (val > best) {
            best = val;
            best_phi = phi;
        }
    }
    double lo = best_phi - 2.0 * M_PI / N, hi = best_phi + 2.0 * M_PI / N;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = value(x1);
        }
    }
    return std::max({best, f1, f2});
}

}  // namespace

// small accessor so the closed forms above read like the math
static_assert(sizeof(Cap) > 0);

double support(const SphericalBody& K, const UnitVector& u, const Vec& v_in) {
    require(std::abs(u.dot(v_in)) <= 1e-10 * std::max(1.0, v_in.norm()), Errc::NotOrthogonal,
            "direction must be tangent to the pole");
    Vec v = v_in.normalized();
    if (const auto* cb = std::get_if<CapBody>(&K)) {
        return cap_support_angle(cb->cap, u, v);
    }
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        return max_over_sphere_points(pb->verts, u, v);
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (u.dot(ch->pole) > 1.0 - 1e-14) {
            TangentFrame f = tangent_frame(ch->pole);
            Vec2 d{v.dot(f.a), v.dot(f.b)};
            return std::atan(region_support(ch->region, d));
        }
        return max_over_sphere_points(region_boundary_on_sphere(*ch), u, v);
    }
    const auto& ab = std::get<AnalyticBody>(K);
    if (u.dot(ab.pole) > 1.0 - 1e-14) {
        TangentFrame f = tangent_frame(ab.pole);
        Vec2 d{v.dot(f.a), v.dot(f.b)};
        return ab.support_angle(d.angle());
    }
    return analytic_support_from(ab, u, v);
}

double radial(const SphericalBody& K, const UnitVector& u, const Vec& v_in) {
    require(std::abs(u.dot(v_in)) <= 1e-10 * std::max(1.0, v_in.norm()), Errc::NotOrthogonal,
            "direction must be tangent to the pole");
    Vec v = v_in.normalized();
    if (const auto* cb = std::get_if<CapBody>(&K)) {
        return cap_radial_angle(cb->cap, u, v);
    }
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        TangentFrame f = tangent_frame(u);
        Polygon2 poly;
        for (const auto& w : pb->verts) poly.pts.push_back(gnomonic(f, w));
        Vec2 d{v.dot(f.a), v.dot(f.b)};
        return std::atan(poly.radial(d));
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        TangentFrame f = tangent_frame(u);
        if (u.dot(ch->pole) > 1.0 - 1e-14) {
            Vec2 d{v.dot(f.a), v.dot(f.b)};
            return std::atan(region_radial(ch->region, d));
        }
        Polygon2 poly;
        for (const auto& w : region_boundary_on_sphere(*ch)) poly.pts.push_back(gnomonic(f, w));
        Vec2 d{v.dot(f.a), v.dot(f.b)};
        return std::atan(poly.radial(d));
    }
    const auto& ab = std::get<AnalyticBody>(K);
    if (u.dot(ab.pole) > 1.0 - 1e-14) {
        TangentFrame f = tangent_frame(ab.pole);
        Vec2 d{v.dot(f.a), v.dot(f.b)};
        return std::atan(ab.chart_radial(d.angle()));
    }
    // meridian bisection on membership; single exit by radial convexity
    require(body_contains(K, u, 1e-12), Errc::DegenerateRadial, "pole is not interior to the body");
    double lo = 0.0, hi = kHalfPi;
    auto point = [&](double t) { return UnitVector(u.vec() * std::cos(t) + v * std::sin(t)); };
    while (body_contains(K, point(hi), 0.0) && hi < M_PI - 1e-9) hi = std::min(M_PI - 1e-9, hi + 0.3);
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (body_contains(K, point(mid), 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SphericalBody polar(const SphericalBody& K) {
    if (const auto* cb = std::get_if<CapBody>(&K)) {
        return CapBody{Cap{-cb->cap.center, kHalfPi - cb->cap.radius}};
    }
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        std::vector<UnitVector> zs = edge_poles(pb->verts);
        std::reverse(zs.begin(), zs.end());
        return PolytopeBody{zs};
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (const auto* ss = std::get_if<SupportSampled>(&ch->region)) {
            // (intersection of {x.nu_i <= h_i})* = conv{nu_i/h_i}, re-framed
            // to the antipodal chart
            TangentFrame f = tangent_frame(ch->pole);
            TangentFrame fp = tangent_frame(-ch->pole);
            std::vector<Vec2> dual;
            dual.reserve(ss->M());
            for (int i = 0; i < ss->M(); ++i) {
                Vec p3 = chart_embed(f, dir2(ss->theta(i)) * (1.0 / ss->h[i]));
                dual.push_back({p3.dot(fp.a), p3.dot(fp.b)});
            }
            return ChartBody{-ch->pole, convex_hull(dual)};
        }
        std::vector<UnitVector> verts = region_boundary_on_sphere(*ch);
        std::vector<UnitVector> zs = edge_poles(verts);
        std::reverse(zs.begin(), zs.end());
        return PolytopeBody{zs};
    }
    const auto& ab = std::get<AnalyticBody>(K);
    if (ab.polar_maker) return ab.polar_maker();
    // sampled fallback: dual region of the sampled support function
    TangentFrame f = tangent_frame(ab.pole);
    TangentFrame fp = tangent_frame(-ab.pole);
    std::vector<Vec2> dual;
    const int M = 512;
    for (int i = 0; i < M; ++i) {
        double th = 2.0 * M_PI * i / M;
        double h = std::tan(ab.support_angle(th));
        require(h > 1e-12, Errc::PoleNotInterior, "polar fallback needs positive support");
        Vec p3 = chart_embed(f, dir2(th) * (1.0 / h));
        dual.push_back({p3.dot(fp.a), p3.dot(fp.b)});
    }
    return ChartBody{-ab.pole, convex_hull(dual)};
}

UnitVector find_pole(const SphericalBody& K) {
    if (const auto* cb = std::get_if<CapBody>(&K)) return cb->cap.center;
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        Vec c = Vec::zero(3);
        for (const auto& w : pb->verts) c += w.vec();
        require(c.norm() > 1e-12, Errc::NoValidPole, "vertex centroid vanishes");
        UnitVector u(c);
        double m = 1e300;
        for (const auto& w : pb->verts) m = std::min(m, u.dot(w));
        if (m > 1e-8) return u;
        UnitVector found = u;
        require(open_hemisphere_direction(pb->verts, &found), Errc::NoValidPole,
                "no open hemisphere contains the polytope");
        return found;
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (const auto* poly = std::get_if<Polygon2>(&ch->region)) {
            if (!poly->contains({0.0, 0.0}, 1e-12)) {
                TangentFrame f = tangent_frame(ch->pole);
                return gnomonic_inv(f, poly->centroid());
            }
        }
        return ch->pole;
    }
    return std::get<AnalyticBody>(K).pole;
}

bool is_proper(const SphericalBody& K) {
    if (const auto* cb = std::get_if<CapBody>(&K)) return cb->cap.radius < kHalfPi - 1e-10;
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        UnitVector u = pb->verts[0];
        return open_hemisphere_direction(pb->verts, &u);
    }
    // chart and analytic bodies have bounded chart images, hence fit in a
    // cap of radius < pi/2 around their pole
    return true;
}

bool body_contains(const SphericalBody& K, const UnitVector& w, double tol) {
    if (const auto* cb = std::get_if<CapBody>(&K)) {
        return geodesic_distance(cb->cap.center, w) <= cb->cap.radius + tol;
    }
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        for (const auto& z : edge_poles(pb->verts)) {
            if (z.dot(w) > tol) return false;
        }
        return true;
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (ch->pole.dot(w) <= 1e-10) return false;
        TangentFrame f = tangent_frame(ch->pole);
        return region_contains(ch->region, gnomonic(f, w), tol);
    }
    const auto& ab = std::get<AnalyticBody>(K);
    if (ab.pole.dot(w) <= 1e-10) return false;
    TangentFrame f = tangent_frame(ab.pole);
    Vec2 x = gnomonic(f, w);
    double r = x.norm();
    if (r < 1e-300) return true;
    return r <= ab.chart_radial(x.angle()) + tol;
}

PolytopeBody spherical_hull(const std::vector<UnitVector>& pts) {
    require(pts.size() >= 3, Errc::BadBodySpec, "hull needs at least 3 points");
    UnitVector u = pts[0];
    require(open_hemisphere_direction(pts, &u), Errc::NotProperlyContained,
            "points admit no common open hemisphere");
    TangentFrame f = tangent_frame(u);
    std::vector<int> idx(pts.size());
    std::vector<Vec2> xs(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        idx[i] = static_cast<int>(i);
        xs[i] = gnomonic(f, pts[i]);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return xs[a].x < xs[b].x || (xs[a].x == xs[b].x && xs[a].y < xs[b].y);
    });
    auto cross3 = [&](int o, int a, int b) {
        return (xs[a] - xs[o]).cross(xs[b] - xs[o]);
    };
    std::vector<int> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], idx[i]) <= 1e-12) --k;
        h[k++] = idx[i];
    }
    for (size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross3(h[k - 2], h[k - 1], idx[i]) <= 1e-12) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    require(h.size() >= 3, Errc::BadBodySpec, "hull is degenerate");
    PolytopeBody body;
    for (int i : h) body.verts.push_back(pts[i]);
    return body;
}

ChartBody discretize(const SphericalBody& K, int M) {
    require(M >= 3, Errc::BadBodySpec, "discretization needs at least 3 vertices");
    UnitVector u = find_pole(K);
    TangentFrame f = tangent_frame(u);
    Polygon2 poly;
    poly.pts.reserve(M);
    for (int i = 0; i < M; ++i) {
        double phi = 2.0 * M_PI * i / M;
        double rho = radial(K, u, f.dir(phi));
        poly.pts.push_back(dir2(phi) * std::tan(rho));
    }
    return ChartBody{u, poly};
}

Polygon2 chart_polygon(const SphericalBody& K, const TangentFrame& f, int M) {
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        Polygon2 poly;
        for (const auto& w : pb->verts) poly.pts.push_back(gnomonic(f, w));
        return poly;
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (f.u.dot(ch->pole) > 1.0 - 1e-14) {
            if (const auto* poly = std::get_if<Polygon2>(&ch->region)) return *poly;
            SupportEnvelope env(std::get<SupportSampled>(ch->region));
            return Polygon2{env.points()};
        }
        Polygon2 poly;
        for (const auto& w : region_boundary_on_sphere(*ch)) poly.pts.push_back(gnomonic(f, w));
        return poly;
    }
    // smooth bodies: inscribed M-gon by radial sampling
    Polygon2 poly;
    poly.pts.reserve(M);
    for (int i = 0; i < M; ++i) {
        double phi = 2.0 * M_PI * i / M;
        double rho = radial(K, f.u, f.dir(phi));
        poly.pts.push_back(dir2(phi) * std::tan(rho));
    }
    return poly;
}

void validate_body(const SphericalBody& K) {
    if (const auto* cb = std::get_if<CapBody>(&K)) {
        require(cb->cap.center.dim() == 3, Errc::BadBodySpec, "cap center must live on S^2");
        require(cb->cap.radius >= 0.0 && cb->cap.radius <= kHalfPi, Errc::BadBodySpec,
                "cap radius must lie in [0, pi/2]");
        return;
    }
    if (const auto* pb = std::get_if<PolytopeBody>(&K)) {
        require(pb->verts.size() >= 3, Errc::BadBodySpec, "polytope needs at least 3 vertices");
        for (const auto& w : pb->verts)
            require(w.dim() == 3, Errc::BadBodySpec, "polytope vertices must live on S^2");
        size_t m = pb->verts.size();
        for (size_t i = 0; i < m; ++i) {
            Vec c = pb->verts[i].vec().cross(pb->verts[(i + 1) % m].vec());
            require(c.norm() > 1e-12, Errc::BadBodySpec, "polytope has repeated or antipodal neighbors");
            for (size_t j = 0; j < m; ++j) {
                require(pb->verts[j].dot(c) >= -1e-10, Errc::BadBodySpec,
                        "polytope vertices are not in counterclockwise convex position");
            }
        }
        UnitVector u = pb->verts[0];
        require(open_hemisphere_direction(pb->verts, &u), Errc::BadBodySpec,
                "polytope vertices admit no common open hemisphere");
        return;
    }
    if (const auto* ch = std::get_if<ChartBody>(&K)) {
        if (const auto* poly = std::get_if<Polygon2>(&ch->region)) {
            require(poly->pts.size() >= 3, Errc::BadBodySpec, "chart polygon needs at least 3 vertices");
            size_t m = poly->pts.size();
            for (size_t i = 0; i < m; ++i) {
                Vec2 a = poly->pts[i], b = poly->pts[(i + 1) % m], c = poly->pts[(i + 2) % m];
                require((b - a).cross(c - b) >= -1e-12, Errc::BadBodySpec,
                        "chart polygon is not counterclockwise convex");
            }
            require(poly->area() > 1e-14, Errc::BadBodySpec, "chart polygon has no area");
        } else {
            const auto& ss = std::get<SupportSampled>(ch->region);
            require(ss.M() >= 8, Errc::BadBodySpec, "support sampling needs at least 8 directions");
            for (double h : ss.h) require(h > 0.0, Errc::BadBodySpec, "support samples must be positive");
        }
        return;
    }
    const auto& ab = std::get<AnalyticBody>(K);
    require(static_cast<bool>(ab.support_angle) && static_cast<bool>(ab.chart_radial), Errc::BadBodySpec,
            "analytic body needs support and radial oracles");
}

}  // namespace sfb
