#pragma once

#include <optional>
#include <string>

#include "sfb/floatbody.hpp"

namespace sfb {

// Curvature data sampled along bd K: chart point, chart normal, chart
// curvature and its spherical pullback, plus the sphere-side point.
struct CurvatureSample {
    UnitVector w;
    Vec2 x;
    Vec2 nu;
    double h_chart = 0.0;
    double h_sphere = 0.0;
    double weight = 0.0;  // dH^1 weight on the sphere for boundary integrals
};

struct CurvatureField {
    enum Mode { Analytic, Discrete } mode = Analytic;
    std::vector<CurvatureSample> samples;
};

// Normalization constant of the limit theorem: c_2 = (1/2) (3/2)^{2/3}.
double limit_constant();

// Gauss-Kronecker (geodesic, n=2) curvature of bd K at boundary point w,
// computed through the chart at u and pulled back. Closed form for caps and
// analytic bodies, zero on polytope facets, 5-point circle fit on discrete
// boundaries.
double gauss_kronecker(const SphericalBody& K, const UnitVector& w, const UnitVector& u);

CurvatureField curvature_field(const SphericalBody& K, const UnitVector& u, int M = 512);

// Floating measure Omega(K, omega) = integral over omega cap bd K of
// H^{1/3} dH^1. omega is a membership predicate evaluated at boundary
// quadrature nodes; pass nullptr for the whole sphere. Zero for non-proper
// bodies and for bodies with empty interior.
double floating_measure(const SphericalBody& K, const std::function<bool(const UnitVector&)>& omega = nullptr,
                        int M = 512);

// Spherical perimeter P(K) (boundary H^1 measure).
double perimeter(const SphericalBody& K, int M = 512);

// Euclidean affine surface area of a chart region: integral of kappa^{1/3}
// over the boundary.
double affine_surface_area(const ConvexRegion& region, int M = 512);

struct ConvergenceRow {
    double delta = 0.0;
    double vol_K = 0.0;
    double vol_float = 0.0;
    double vol_diff = 0.0;
    double quotient = 0.0;
};

// One schedule point of the limit experiment:
// quotient = (vol K - vol K_[delta]) / delta^{2/3}.
ConvergenceRow limit_quotient(const SphericalBody& K, const UnitVector& u, double delta,
                              const DirectionGrid& grid = {});

struct ConvergenceResult {
    std::vector<ConvergenceRow> rows;
    double extrapolated = 0.0;  // fitted a in quotient ~ a + b delta^p
    double fit_b = 0.0;
    double fit_p = 0.0;
    double fit_residual = 0.0;
    double reference = 0.0;  // c_2 * Omega(K), the predicted limit
};

ConvergenceResult convergence_experiment(const SphericalBody& K, const UnitVector& u,
                                         const std::vector<double>& schedule, const DirectionGrid& grid = {});

// Euclidean analogue in the plane: quotient -> c_2 * affine surface area.
ConvergenceResult euclid_convergence_experiment(const ConvexRegion& region, const std::vector<double>& schedule,
                                                int M = 512);

// Pointwise integrand of the limit theorem at boundary point w:
//   f(w, delta) = delta^{-2/3} (-u.N_w)/sin^2(d(w,u)) *
//                 (cos d(w_delta, u) - cos d(w, u)),
// which tends to c_2 H(K,w)^{1/3} as delta -> 0.
double integrand_profile(const SphericalBody& K, const UnitVector& u, const UnitVector& w, double delta,
                         const DirectionGrid& grid = {});

struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // signed: lhs - rhs for equalities, violation for inequalities
    bool pass = false;
};

// Duality: Omega(K) equals the curvature-2/3 integral over bd K*.
CheckResult check_duality(const SphericalBody& K, int M = 512, double tol = 1e-4);

// Hoelder bound Omega(K) <= P(K*)^{1/3} P(K)^{2/3}; caps are the equality
// case. gap = lhs - rhs (<= tol passes).
CheckResult check_isoperimetric(const SphericalBody& K, int M = 512, double tol = 1e-6);

// Enclosure bound for C_u(alpha) inside K inside C_u(beta):
//   Omega(K)/(2 pi) <= (cos^2(alpha) tan^2(beta) P(K) / (tan(alpha) 2 pi))^{1/3};
// equality for caps (alpha = beta).
CheckResult check_enclosure(const SphericalBody& K, const UnitVector& u, int M = 512, double tol = 1e-6);

// Valuation defect |Omega(K') + Omega(L') - Omega(K' union L') - Omega(K'
// intersect L')| for the split of `cap` by the great circle with pole z
// through its interior: K' = cap cut to S^-_z, L' = cap cut to S^+_z.
// Arc endpoints are closed-form, so the defect is rounding-level.
CheckResult check_valuation(const Cap& cap, const UnitVector& z, double tol = 1e-5);

// Same defect for two lune bodies; they must partition a common cap along
// one great circle (UnionNotConvex otherwise).
CheckResult check_valuation(const AnalyticBody& K, const AnalyticBody& L, double tol = 1e-5);

// Exploration data for the cap-comparison question: Omega(K) against
// Omega(C^K) where C^K is the volume-matched cap. Not a theorem; ratio > 1
// would be a counterexample to the conjectured bound.
struct ConjectureGap {
    double vol = 0.0;
    double alpha_cap = 0.0;  // radius of the volume-matched cap (bisection, tol 1e-12)
    double omega_body = 0.0;
    double omega_cap = 0.0;
    double ratio = 0.0;  // omega_body / omega_cap
};

ConjectureGap conjecture_gap(const SphericalBody& K, int M = 512);

// Closed forms for caps, used across checks and tests.
double cap_volume(double alpha);       // 2 pi (1 - cos alpha)
double cap_perimeter(double alpha);    // 2 pi sin alpha
double cap_floating_measure(double alpha);  // 2 pi cos^{1/3} sin^{2/3} alpha

}  // namespace sfb
