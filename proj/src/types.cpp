#include "squeeze_lab/types.hpp"

#include <stdexcept>

namespace squeeze_lab {

DegreeVector::DegreeVector(int a, int b) : d1(a), d2(b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("DegreeVector: exponents must be positive integers");
    }
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Outside: return "outside";
        case Membership::Boundary: return "boundary";
    }
    return "boundary";
}

DomainSpec::DomainSpec(DomainTag tag, double radius, Point2C center, double tol)
    : tag_(tag), radius_(radius), center_(center), tol_(tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("DomainSpec: tolerance must be positive");
}

DomainSpec DomainSpec::symmetrized_bidisc(double tol) {
    return DomainSpec(DomainTag::SymmetrizedBidisc, 0.0, Point2C{}, tol);
}

DomainSpec DomainSpec::conv_hull_g2(double tol) {
    return DomainSpec(DomainTag::ConvHullG2, 0.0, Point2C{}, tol);
}

DomainSpec DomainSpec::polydisc(double radius, double tol) {
    if (!(radius > 0.0 && radius < 1.0)) {
        throw std::invalid_argument("DomainSpec: polydisc radius must lie in (0, 1)");
    }
    return DomainSpec(DomainTag::Polydisc, radius, Point2C{}, tol);
}

DomainSpec DomainSpec::ball(const Point2C& center, double radius, double tol) {
    if (!(radius > 0.0)) throw std::invalid_argument("DomainSpec: ball radius must be positive");
    if (!center.finite()) throw std::invalid_argument("DomainSpec: ball center must be finite");
    return DomainSpec(DomainTag::Ball, radius, center, tol);
}

bool DomainSpec::is_d_balanced(const DegreeVector& d) const {
    switch (tag_) {
        case DomainTag::Polydisc:
            return true;  // complete Reinhardt: moduli only shrink under the action
        case DomainTag::Ball:
            return center_ == Point2C{};
        case DomainTag::SymmetrizedBidisc:
        case DomainTag::ConvHullG2:
            // roots of t^2 - lambda^k s t + lambda^{2k} p are lambda^k times
            // the roots of t^2 - s t + p, so any (k, 2k) works
            return d.d2 == 2 * d.d1;
    }
    return false;
}

std::string DomainSpec::name() const {
    switch (tag_) {
        case DomainTag::SymmetrizedBidisc: return "symmetrized_bidisc";
        case DomainTag::ConvHullG2: return "conv_hull_g2";
        case DomainTag::Polydisc: return "polydisc";
        case DomainTag::Ball: return "ball";
    }
    return "unknown";
}

CircleGrid::CircleGrid(int n_, int refine_iters_) : n(n_), refine_iters(refine_iters_) {
    if (n < 16) throw std::invalid_argument("CircleGrid: n must be at least 16");
    if (refine_iters < 0) throw std::invalid_argument("CircleGrid: refine_iters must be >= 0");
}

std::string to_string(BoundProvenance p) {
    switch (p) {
        case BoundProvenance::ClosedForm: return "closed_form";
        case BoundProvenance::NumericK: return "numeric_k";
        case BoundProvenance::OriginCertificate: return "origin_certificate";
    }
    return "unknown";
}

void CounterexampleConfig::validate() const {
    if (!(r > 0.0 && r < 0.5)) {
        throw std::invalid_argument("CounterexampleConfig: r must lie in (0, 1/2)");
    }
    if (!(eps > 0.0 && eps < r)) {
        throw std::invalid_argument("CounterexampleConfig: eps must lie in (0, r)");
    }
    if (!(d == DegreeVector{1, 2})) {
        throw std::invalid_argument("CounterexampleConfig: exponents are fixed at (1, 2)");
    }
    if (k_density < 4) {
        throw std::invalid_argument("CounterexampleConfig: k_density must be at least 4");
    }
    if (slice_grid.radii < 1 || slice_grid.angles < 1) {
        throw std::invalid_argument("CounterexampleConfig: slice grid must be nonempty");
    }
}

std::string to_string(ViolationVerdict v) {
    switch (v) {
        case ViolationVerdict::Violated: return "violated";
        case ViolationVerdict::NotViolated: return "not_violated";
        case ViolationVerdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

}  // namespace squeeze_lab
