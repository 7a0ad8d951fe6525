#pragma once

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Sample both faces of the polydisc boundary on polar grids of the configured
/// density, discarding points within eps of Q = (0, r). Every retained point is
/// strictly inside G2 (guaranteed by r < 1/2, asserted anyway).
CompactSetSample build_K(const CounterexampleConfig& cfg);

/// Lower bound r/2 for the squeezing value at the origin, certified by sampling:
/// every drawn point with weighted hull gauge below r/2 - tol must satisfy
/// |z1| < r and |z2| < r^2/4, hence lie off the polydisc boundary and off K.
/// A failed sample raises CertificationFailed instead of passing silently.
BoundInterval sq_lower_origin(const CounterexampleConfig& cfg, int certification_grid);

/// Closed-form upper bound sqrt((r - |z1|) / (1 - r |z1|)) on the slice
/// {z2 = 0}, valid for 0 < |z1| < r; strictly decreasing, with limit 0 at r.
BoundInterval sq_upper_closed_form(Complex z1, const CounterexampleConfig& cfg);

/// Numeric upper bound sqrt(dist_to_compact(z, K)): the squared squeezing value
/// is dominated by the tanh-scale distance to K (exponent L = 2).
BoundInterval sq_upper_numeric(const Point2C& z, const CompactSetSample& k,
                               const CircleGrid& grid, const CounterexampleConfig& cfg);

/// The radius beta = r (4 - r) / (4 - r^3) where the closed-form slice bound
/// crosses r/2: (r - beta)/(1 - r beta) = r^2/4, and beta < r on (0, 1).
double beta_threshold(double r);

/// One slice point checked against the boundary-point estimate: the tau-grid
/// maximum of the Mobius distance between phi_tau(z1, 0) and phi_tau(w0) with
/// w0 = (r z1/|z1|, 0), compared against both the printed bound
/// (r - |z1|)/(1 - r |z1|) and its doubled variant.
struct Lemma33Record {
    double z1_abs = 0.0;
    double max_mobius = 0.0;
    double bound = 0.0;
    double doubled_bound = 0.0;
    bool within_bound = false;
    bool within_doubled = false;
    Complex argmax_tau{1.0, 0.0};
};

Lemma33Record lemma33_check(Complex z1, const CounterexampleConfig& cfg,
                            const CircleGrid& grid);

/// Assemble the full maximum-principle report: origin lower bound, slice upper
/// bounds over the annulus (beta, r) on {z2 = 0}, the violation verdict, and
/// the log of resolved textual ambiguities.
ViolationReport psh_violation_report(const CounterexampleConfig& cfg);

}  // namespace squeeze_lab
