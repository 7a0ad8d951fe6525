#include "squeeze_lab/invariant_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "squeeze_lab/circle_opt.hpp"
#include "squeeze_lab/domain_geometry.hpp"
#include "squeeze_lab/errors.hpp"

namespace squeeze_lab {

namespace {

// Unchecked kernels for the hot loops. The public entry points validate once.
double mobius_kernel(Complex a, Complex b) {
    return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

Complex phi_kernel(const Point2C& z, Complex tau) {
    return (2.0 * tau * z.z2 - z.z1) / (2.0 - tau * z.z1);
}

void require_inside_g2(const Point2C& z, const char* op) {
    if (g2_contains(z, kGaugeTol).status != Membership::Inside) {
        throw DomainError(std::string(op) + ": point is not inside the symmetrized bidisc");
    }
}

}  // namespace

double mobius(Complex a, Complex b) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag())) {
        throw std::invalid_argument("mobius: non-finite arguments");
    }
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0) {
        throw DomainError("mobius: arguments must lie in the open unit disc");
    }
    if (a == b) return 0.0;
    return mobius_kernel(a, b);
}

double poincare(Complex a, Complex b) { return std::atanh(mobius(a, b)); }

Complex extremal_phi(const Point2C& z, Complex tau) {
    if (!z.finite()) throw std::invalid_argument("extremal_phi: non-finite point");
    if (std::abs(std::abs(tau) - 1.0) > 1e-6) {
        throw std::invalid_argument("extremal_phi: tau must have unit modulus");
    }
    const Complex den = 2.0 - tau * z.z1;
    if (std::abs(den) < 1e-12) {
        throw DomainError("extremal_phi: denominator 2 - tau z1 vanishes");
    }
    return (2.0 * tau * z.z2 - z.z1) / den;
}

DistanceValue c_g2(const Point2C& z, const Point2C& w, const CircleGrid& grid) {
    require_inside_g2(z, "c_g2");
    require_inside_g2(w, "c_g2");
    if (z == w) return DistanceValue{0.0, 0.0, Complex{1.0, 0.0}};

    auto f = [&z, &w](double theta) {
        const Complex tau{std::cos(theta), std::sin(theta)};
        return mobius_kernel(phi_kernel(z, tau), phi_kernel(w, tau));
    };
    const CircleMax best = max_on_circle(f, grid.n, grid.refine_iters);

    DistanceValue out;
    out.rho = best.value;
    out.dist = std::atanh(best.value);
    out.argmax_tau = Complex{std::cos(best.theta), std::sin(best.theta)};
    return out;
}

double dist_to_compact(const Point2C& z, const CompactSetSample& k, const CircleGrid& grid) {
    if (k.points.empty()) {
        throw EmptyCompactSet("dist_to_compact: compact-set sample is empty");
    }
    require_inside_g2(z, "dist_to_compact");

    // Start from the Euclidean-nearest sample, then prune with a cheap partial
    // maximum: the tanh distance at any tau subset lower-bounds the full
    // tau-grid maximum, so a candidate whose partial value already exceeds the
    // running best can never attain the minimum.
    std::size_t nearest = 0;
    double nearest_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k.points.size(); ++i) {
        const double d = dist2c(z, k.points[i].point);
        if (d < nearest_d) {
            nearest_d = d;
            nearest = i;
        }
    }
    double best = c_g2(z, k.points[nearest].point, grid).rho;
    if (best == 0.0) return 0.0;

    constexpr int kProbe = 16;
    std::array<Complex, kProbe> probe_tau;
    std::array<Complex, kProbe> phi_z;
    for (int j = 0; j < kProbe; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / kProbe;
        probe_tau[j] = Complex{std::cos(theta), std::sin(theta)};
        phi_z[j] = phi_kernel(z, probe_tau[j]);
    }

    for (std::size_t i = 0; i < k.points.size(); ++i) {
        if (i == nearest) continue;
        const Point2C& w = k.points[i].point;
        if (w == z) return 0.0;
        double lb = 0.0;
        for (int j = 0; j < kProbe && lb < best; ++j) {
            lb = std::max(lb, mobius_kernel(phi_z[j], phi_kernel(w, probe_tau[j])));
        }
        if (lb >= best) continue;
        best = std::min(best, c_g2(z, w, grid).rho);
        if (best == 0.0) return 0.0;
    }
    return best;
}

SandwichBounds c_origin_sandwich(const Point2C& z, const DomainSpec& domain,
                                 const DegreeVector& d, double tol) {
    if (domain.tag() != DomainTag::Polydisc && domain.tag() != DomainTag::ConvHullG2) {
        throw std::invalid_argument(
            "c_origin_sandwich: domain must be a bounded convex balanced tag "
            "(polydisc or conv_hull_g2)");
    }
    if (!domain.is_d_balanced(d)) {
        throw std::invalid_argument("c_origin_sandwich: domain is not balanced for d");
    }
    const double h = d_minkowski(z, domain, d, tol);
    if (h >= 1.0) {
        throw DomainError("c_origin_sandwich: point lies outside the domain");
    }
    double hl = 1.0;
    for (int i = 0; i < d.max_degree(); ++i) hl *= h;
    return SandwichBounds{std::atanh(hl), std::atanh(h)};
}

}  // namespace squeeze_lab
