#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace squeeze_lab {

using Complex = std::complex<double>;

constexpr double kGaugeTol = 1e-9;    // default tolerance for gauge bisection
constexpr double kSupportTol = 1e-6;  // default tolerance for support-function maxima
constexpr double kBisectionBracket = 4.0;  // safe over-bracket for every supported gauge

/// A point of C^2. Every operation rejects non-finite components.
struct Point2C {
    Complex z1{0.0, 0.0};
    Complex z2{0.0, 0.0};

    bool finite() const {
        return std::isfinite(z1.real()) && std::isfinite(z1.imag()) &&
               std::isfinite(z2.real()) && std::isfinite(z2.imag());
    }
    bool operator==(const Point2C&) const = default;
};

inline std::array<double, 4> to_real4(const Point2C& z) {
    return {z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag()};
}

inline Point2C from_real4(const std::array<double, 4>& v) {
    return Point2C{Complex{v[0], v[1]}, Complex{v[2], v[3]}};
}

inline double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm4(const std::array<double, 4>& a) { return std::sqrt(dot4(a, a)); }

/// Euclidean distance in C^2 viewed as R^4.
inline double dist2c(const Point2C& a, const Point2C& b) {
    const double d1 = std::abs(a.z1 - b.z1);
    const double d2 = std::abs(a.z2 - b.z2);
    return std::hypot(d1, d2);
}

/// Exponent pair of the weighted scaling action (z1, z2) -> (lambda^d1 z1, lambda^d2 z2).
/// L = max(d1, d2) is always derived, never stored.
struct DegreeVector {
    int d1 = 1;
    int d2 = 2;

    DegreeVector() = default;
    DegreeVector(int a, int b);

    int max_degree() const { return d1 > d2 ? d1 : d2; }
    bool operator==(const DegreeVector&) const = default;
};

enum class Membership { Inside, Outside, Boundary };

std::string to_string(Membership m);

struct CertificateAtom {
    double weight = 0.0;
    Point2C point;
};

/// Tri-state membership verdict with a signed margin (positive means inside).
/// Inside verdicts for the convex hull may carry a convex-combination certificate.
struct MembershipVerdict {
    Membership status = Membership::Boundary;
    double margin = 0.0;
    std::optional<std::vector<CertificateAtom>> certificate;
};

enum class DomainTag { SymmetrizedBidisc, ConvHullG2, Polydisc, Ball };

/// Descriptor of a supported domain together with its numeric tolerance.
class DomainSpec {
public:
    static DomainSpec symmetrized_bidisc(double tol = kGaugeTol);
    static DomainSpec conv_hull_g2(double tol = kGaugeTol);
    static DomainSpec polydisc(double radius, double tol = kGaugeTol);  // radius in (0, 1)
    static DomainSpec ball(const Point2C& center, double radius, double tol = kGaugeTol);

    DomainTag tag() const { return tag_; }
    double radius() const { return radius_; }
    const Point2C& center() const { return center_; }
    double tolerance() const { return tol_; }

    /// True when the weighted scaling action with exponents d maps the domain into itself.
    bool is_d_balanced(const DegreeVector& d) const;

    std::string name() const;

private:
    DomainSpec(DomainTag tag, double radius, Point2C center, double tol);

    DomainTag tag_;
    double radius_ = 0.0;
    Point2C center_;
    double tol_ = kGaugeTol;
};

/// Sampling plan for maximizations over the unit circle: n uniform samples,
/// then local refinement. Refinement never decreases the running maximum.
struct CircleGrid {
    int n = 512;
    int refine_iters = 40;

    CircleGrid() = default;
    CircleGrid(int n_, int refine_iters_);
};

/// A pseudodistance value in both scales plus the circle point attaining it.
struct DistanceValue {
    double rho = 0.0;   // tanh scale, in [0, 1)
    double dist = 0.0;  // atanh(rho)
    Complex argmax_tau{1.0, 0.0};
};

enum class KFace { Z1Face, Z2Face };  // |z1| = r face vs |z2| = r face

struct KPoint {
    Point2C point;
    KFace face = KFace::Z1Face;
};

/// Finite sample of K: the boundary of the closed polydisc of radius r with the
/// open ball of radius eps around Q = (0, r) removed.
struct CompactSetSample {
    std::vector<KPoint> points;
    double r = 0.0;
    double eps = 0.0;
};

enum class BoundProvenance { ClosedForm, NumericK, OriginCertificate };

std::string to_string(BoundProvenance p);

/// Certified one-sided bound on a squeezing-function value.
struct BoundInterval {
    double lower = 0.0;
    double upper = 1.0;
    BoundProvenance provenance = BoundProvenance::ClosedForm;
};

struct SliceGridSpec {
    int radii = 24;
    int angles = 3;
};

/// Parameters of the counterexample domain: the convex hull of the symmetrized
/// bidisc with the compact set K removed.
struct CounterexampleConfig {
    double r = 0.4;     // polydisc radius, in (0, 1/2)
    double eps = 0.05;  // excluded-ball radius around Q = (0, r), in (0, r)
    DegreeVector d{1, 2};
    int k_density = 64;  // angular samples per face angle parameter
    SliceGridSpec slice_grid;
    CircleGrid tau_grid;
    std::uint64_t seed = 42;

    Point2C q() const { return Point2C{Complex{0.0, 0.0}, Complex{r, 0.0}}; }
    void validate() const;
};

enum class ViolationVerdict { Violated, NotViolated, Indeterminate };

std::string to_string(ViolationVerdict v);

struct SliceBoundRow {
    double rho = 0.0;    // |z1|
    double theta = 0.0;  // arg z1
    double upper_closed_form = 0.0;
    double upper_numeric = 0.0;
};

/// Outcome of the maximum-principle check on the slice {z2 = 0}.
struct ViolationReport {
    double r = 0.0;
    double eps = 0.0;
    double beta = 0.0;
    double center_lower = 0.0;
    std::vector<SliceBoundRow> slice_upper;
    bool violated = false;
    ViolationVerdict verdict = ViolationVerdict::Indeterminate;
    std::vector<std::string> ambiguity_log;
};

}  // namespace squeeze_lab
