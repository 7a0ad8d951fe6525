#include "squeeze_lab/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "squeeze_lab/circle_opt.hpp"
#include "squeeze_lab/domain_geometry.hpp"
#include "squeeze_lab/errors.hpp"
#include "squeeze_lab/invariant_metrics.hpp"
#include "squeeze_lab/sampling.hpp"

namespace squeeze_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVerdictMargin = 1e-12;
constexpr int kDefaultCertificationGrid = 10000;

std::vector<std::string> ambiguity_adjudications() {
    return {
        "extremal family denominator read as (2 - tau z1); the printed (2 - tau z2) "
        "is inconsistent with the expansion (2 - tau z1)(2 - tau w0) used downstream",
        "origin lower bound implemented as r/2: the sublevel-set argument certifies "
        "gauge < r/2 => off the polydisc boundary, not the printed constant 1/2",
        "slice bound denominator implemented as (1 - r |z1|) from the worked estimate; "
        "the summary bullet's (2 - r |z1|) is superseded",
        "boundary-point bound checked against both (r - |z1|)/(1 - r |z1|) and its "
        "doubled variant; the derivation carries a factor 2 that the final line drops",
        "the slice H is taken to be {z2 = 0}; every concrete computation lives there",
        "excluded ball radius is eps throughout; the ball is once misprinted with radius r",
    };
}

}  // namespace

CompactSetSample build_K(const CounterexampleConfig& cfg) {
    cfg.validate();
    const double r = cfg.r;
    const int n = cfg.k_density;
    const int shells = std::max(2, n / 8);
    const Point2C q = cfg.q();

    CompactSetSample k;
    k.r = r;
    k.eps = cfg.eps;

    auto keep = [&](const Point2C& p, KFace face) {
        if (dist2c(p, q) < cfg.eps) return;
        if (g2_contains(p, kGaugeTol).status != Membership::Inside) {
            throw std::logic_error("build_K: boundary sample escaped G2; r < 1/2 violated?");
        }
        k.points.push_back({p, face});
    };

    for (int i = 0; i < n; ++i) {
        const double theta = kTwoPi * i / n;
        const Complex edge = std::polar(r, theta);
        // face |z1| = r: the other coordinate ranges over the closed disc
        keep(Point2C{edge, Complex{}}, KFace::Z1Face);
        for (int j = 1; j <= shells; ++j) {
            const double rho = r * j / shells;
            for (int m = 0; m < n; ++m) {
                keep(Point2C{edge, std::polar(rho, kTwoPi * m / n)}, KFace::Z1Face);
            }
        }
        // face |z2| = r
        keep(Point2C{Complex{}, edge}, KFace::Z2Face);
        for (int j = 1; j <= shells; ++j) {
            const double rho = r * j / shells;
            for (int m = 0; m < n; ++m) {
                keep(Point2C{std::polar(rho, kTwoPi * m / n), edge}, KFace::Z2Face);
            }
        }
    }

    if (k.points.empty()) {
        throw EmptyCompactSet("build_K: every sample fell inside the excluded ball");
    }
    return k;
}

BoundInterval sq_lower_origin(const CounterexampleConfig& cfg, int certification_grid) {
    cfg.validate();
    if (certification_grid < 1) {
        throw std::invalid_argument("sq_lower_origin: certification grid must be positive");
    }
    const double target = 0.5 * cfg.r;
    const double tol = kGaugeTol;
    const DomainSpec hull = DomainSpec::conv_hull_g2();
    const double z2_cap = cfg.r * cfg.r / 4.0;

    auto certify = [&](const Point2C& z) {
        // gauge < r/2 must place the point off the polydisc boundary: strictly
        // inside in the first coordinate and below r^2/4 in the second
        if (!(std::abs(z.z1) < cfg.r) || !(std::abs(z.z2) < z2_cap)) {
            throw CertificationFailed(
                "sq_lower_origin: sublevel sample reaches the polydisc boundary", z);
        }
        // the rescaling step of the argument: (2 z1 / r, 4 z2 / r^2) stays in the hull
        const Point2C scaled{2.0 * z.z1 / cfg.r, 4.0 * z.z2 / (cfg.r * cfg.r)};
        if (conv_g2_moment_margin(scaled) < -1e-9) {
            throw CertificationFailed(
                "sq_lower_origin: rescaled sublevel sample escapes the hull", z);
        }
    };

    certify(Point2C{});  // the origin itself belongs to the sublevel set
    SampleStream stream(cfg.seed);
    int certified = 1;
    int attempts = 0;
    while (certified < certification_grid) {
        if (++attempts > 64 * certification_grid) {
            throw CertificationFailed(
                "sq_lower_origin: sampler failed to populate the sublevel set", Point2C{});
        }
        const Point2C w = stream.hull_point();
        const double hw = d_minkowski(w, hull, cfg.d, tol);
        if (hw < 1e-9) continue;
        const double mag = stream.uniform01() * (target - 2.0 * tol) / hw;
        const Point2C z = d_action(w, std::polar(mag, stream.angle()), cfg.d);
        if (d_minkowski(z, hull, cfg.d, tol) >= target - tol) continue;
        certify(z);
        ++certified;
    }
    return BoundInterval{target, 1.0, BoundProvenance::OriginCertificate};
}

BoundInterval sq_upper_closed_form(Complex z1, const CounterexampleConfig& cfg) {
    cfg.validate();
    const double a = std::abs(z1);
    if (!(a > 0.0 && a < cfg.r)) {
        throw DomainError("sq_upper_closed_form: |z1| must lie in (0, r)");
    }
    const double upper = std::sqrt((cfg.r - a) / (1.0 - cfg.r * a));
    return BoundInterval{0.0, upper, BoundProvenance::ClosedForm};
}

BoundInterval sq_upper_numeric(const Point2C& z, const CompactSetSample& k,
                               const CircleGrid& grid, const CounterexampleConfig& cfg) {
    cfg.validate();
    if (g2_contains(z, kGaugeTol).status != Membership::Inside) {
        throw DomainError("sq_upper_numeric: point is not inside the symmetrized bidisc");
    }
    const double d = dist_to_compact(z, k, grid);
    // exponent L = max(1, 2) = 2: the squared squeezing value is below d
    return BoundInterval{0.0, std::sqrt(d), BoundProvenance::NumericK};
}

double beta_threshold(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("beta_threshold: r must lie in (0, 1)");
    }
    return r * (4.0 - r) / (4.0 - r * r * r);
}

Lemma33Record lemma33_check(Complex z1, const CounterexampleConfig& cfg,
                            const CircleGrid& grid) {
    cfg.validate();
    const double a = std::abs(z1);
    if (!(a > 0.0 && a < cfg.r)) {
        throw std::invalid_argument("lemma33_check: |z1| must lie in (0, cfg.r)");
    }
    const Point2C z{z1, Complex{}};
    const Point2C w0{cfg.r * z1 / a, Complex{}};

    auto f = [&](double theta) {
        const Complex tau{std::cos(theta), std::sin(theta)};
        const Complex den_z = 2.0 - tau * z.z1;
        const Complex den_w = 2.0 - tau * w0.z1;
        const Complex fz = -z.z1 / den_z;
        const Complex fw = -w0.z1 / den_w;
        return std::abs(fz - fw) / std::abs(1.0 - std::conj(fz) * fw);
    };
    const CircleMax best = max_on_circle(f, grid.n, grid.refine_iters);

    Lemma33Record rec;
    rec.z1_abs = a;
    rec.max_mobius = best.value;
    rec.bound = (cfg.r - a) / (1.0 - cfg.r * a);
    rec.doubled_bound = 2.0 * rec.bound;
    rec.within_bound = best.value <= rec.bound + 1e-12;
    rec.within_doubled = best.value <= rec.doubled_bound + 1e-12;
    rec.argmax_tau = Complex{std::cos(best.theta), std::sin(best.theta)};
    return rec;
}

ViolationReport psh_violation_report(const CounterexampleConfig& cfg) {
    cfg.validate();
    ViolationReport report;
    report.r = cfg.r;
    report.eps = cfg.eps;
    report.beta = beta_threshold(cfg.r);
    report.ambiguity_log = ambiguity_adjudications();

    report.center_lower = sq_lower_origin(cfg, kDefaultCertificationGrid).lower;

    const CompactSetSample k = build_K(cfg);

    // slice angles snapped onto the K angular grid so the aligned boundary
    // point (r z1/|z1|, 0) is an exact member of the sample
    std::vector<double> angles;
    for (int m = 0; m < cfg.slice_grid.angles; ++m) {
        const int snap = static_cast<int>(
            std::round(static_cast<double>(m) * cfg.k_density / cfg.slice_grid.angles));
        angles.push_back(kTwoPi * (snap % cfg.k_density) / cfg.k_density);
    }

    double worst_upper = 0.0;
    for (int i = 1; i <= cfg.slice_grid.radii; ++i) {
        const double rho =
            report.beta + (cfg.r - report.beta) * i / (cfg.slice_grid.radii + 1);
        for (const double theta : angles) {
            const Complex z1 = std::polar(rho, theta);
            SliceBoundRow row;
            row.rho = rho;
            row.theta = theta;
            row.upper_closed_form = sq_upper_closed_form(z1, cfg).upper;
            row.upper_numeric =
                sq_upper_numeric(Point2C{z1, Complex{}}, k, cfg.tau_grid, cfg).upper;
            worst_upper = std::max({worst_upper, row.upper_closed_form, row.upper_numeric});
            report.slice_upper.push_back(row);
        }
    }

    if (worst_upper < report.center_lower - kVerdictMargin) {
        report.verdict = ViolationVerdict::Violated;
    } else if (worst_upper <= report.center_lower + kVerdictMargin) {
        report.verdict = ViolationVerdict::Indeterminate;
    } else {
        report.verdict = ViolationVerdict::NotViolated;
    }
    report.violated = report.verdict == ViolationVerdict::Violated;
    return report;
}

}  // namespace squeeze_lab
