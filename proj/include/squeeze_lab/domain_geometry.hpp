#pragma once

#include <array>
#include <utility>
#include <vector>

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Roots of t^2 - s t + p, ordered lexicographically (real part, then imaginary
/// part). Computed with the cancellation-free variant: the large-magnitude root
/// first, the other as p over it.
std::pair<Complex, Complex> quadratic_roots(Complex s, Complex p);

/// Root-criterion membership for the symmetrized bidisc
/// G2 = {(x + y, x y) : |x| < 1, |y| < 1}: (z1, z2) lies in G2 exactly when both
/// roots of t^2 - z1 t + z2 lie in the open unit disc. margin = 1 - max root modulus.
MembershipVerdict g2_contains(const Point2C& z, double tol);

/// Image of an n x n x n x n polar grid of the bidisc (radii j/(n+1), so the
/// origin is included and every radius stays strictly below 1) under the
/// symmetrization map (x, y) -> (x + y, x y).
std::vector<Point2C> sample_g2(int n);

/// Support function of closure(G2) — equivalently of its convex hull — in the
/// real direction u (unit 4-vector), computed by maximizing over the torus of
/// the bidisc parametrization with a coarse grid plus local pattern refinement.
/// The result never decreases as refine_iters grows.
double support_conv_g2(const std::array<double, 4>& direction, int refine_iters = 48);

/// Same support function computed on the extreme curve
/// theta -> (2 e^{i theta}, e^{2 i theta}); used as a fast cross-check oracle.
double support_conv_g2_curve(const std::array<double, 4>& direction, int grid_n = 512,
                             int refine_iters = 60);

struct CertSearchBudget {
    int max_iterations = 4000;  // descent steps of the certificate search
    int lmo_grid = 256;         // angular grid per linear minimization
    double residual = 1e-9;     // Euclidean reproduction target for certificates
};

/// Membership in the open convex hull of G2. Inside verdicts carry a convex
/// combination of at most 5 strictly interior G2 points reproducing z; Outside
/// verdicts are cross-checked against a separating direction and the support
/// function. margin = 1 - (weighted gauge of z).
MembershipVerdict conv_g2_contains(const Point2C& z, double tol,
                                   const CertSearchBudget& budget = {});

/// Exact interior test for conv(G2). The closed hull is the convex hull of the
/// curve theta -> (2 e^{i theta}, e^{2 i theta}) (the extreme points of
/// closure(G2)), so membership is equivalent to positive semidefiniteness of
/// the 3x3 Toeplitz moment matrix of (z1/2, z2); the open hull corresponds to
/// positive definiteness.
bool conv_g2_member(const Point2C& z);

/// Smallest eigenvalue of that moment matrix; negative outside the closed hull.
double conv_g2_moment_margin(const Point2C& z);

/// Weighted gauge of conv(G2) for exponents (1, 2), by bisection on the exact
/// membership predicate.
double conv_g2_gauge(const Point2C& z, double tol = kGaugeTol);

/// The weighted scaling action (lambda^d1 z1, lambda^d2 z2).
Point2C d_action(const Point2C& z, Complex lambda, const DegreeVector& d);

/// Weighted Minkowski gauge inf{t > 0 : (z1/t^d1, z2/t^d2) in domain}, by
/// monotone bisection on [0, 4]. |result - gauge| <= tol.
double d_minkowski(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                   double tol);

/// True iff d_minkowski(z) < level - tol, for level in (0, 1].
bool d_sublevel_contains(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                         double level, double tol);

/// Tag-dispatched membership verdict (no certificates). Margins: symmetrized
/// bidisc uses 1 - max root modulus, polydisc 1 - max(|z1|,|z2|)/r, ball
/// 1 - |z - c|/R, hull 1 - weighted gauge.
MembershipVerdict domain_contains(const DomainSpec& domain, const Point2C& z);

/// Closed-form weighted gauge of the polydisc: max_i (|z_i|/r)^(1/d_i).
double polydisc_gauge_closed_form(const Point2C& z, double radius, const DegreeVector& d);

}  // namespace squeeze_lab
