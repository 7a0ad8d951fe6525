#pragma once

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Mobius distance on the unit disc in tanh scale: |a - b| / |1 - conj(a) b|.
double mobius(Complex a, Complex b);

/// Poincare distance: atanh of the Mobius distance.
double poincare(Complex a, Complex b);

/// The extremal family of the symmetrized bidisc,
/// phi_tau(z) = (2 tau z2 - z1) / (2 - tau z1) for |tau| = 1. Maps G2 into the
/// unit disc and attains the Caratheodory distance for some unit tau.
Complex extremal_phi(const Point2C& z, Complex tau);

/// Caratheodory distance on G2: maximum over the refined tau-grid of the
/// Mobius distance between phi_tau(z) and phi_tau(w). Exactly symmetric in
/// (z, w); coincident points short-circuit to zero.
DistanceValue c_g2(const Point2C& z, const Point2C& w, const CircleGrid& grid = {});

/// min over the sample of K of c_g2(z, .).rho — an upper bound (up to the
/// sampling density of K) for the tanh-scale distance from z to K measured in
/// the hull, since Caratheodory distances decrease under domain inclusion.
double dist_to_compact(const Point2C& z, const CompactSetSample& k,
                       const CircleGrid& grid = {});

struct SandwichBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-sided bounds on the Caratheodory distance from the origin in a bounded,
/// convex domain that is balanced for the exponents d:
/// atanh(h^L) <= c(0, z) <= atanh(h) with h the weighted gauge, L = max(d1, d2).
SandwichBounds c_origin_sandwich(const Point2C& z, const DomainSpec& domain,
                                 const DegreeVector& d, double tol);

}  // namespace squeeze_lab
