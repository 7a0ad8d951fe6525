#include "squeeze_lab/domain_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "squeeze_lab/circle_opt.hpp"
#include "squeeze_lab/errors.hpp"

namespace squeeze_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(const Point2C& z, const char* op) {
    if (!z.finite()) {
        throw std::invalid_argument(std::string(op) + ": point has non-finite components");
    }
}

void require_positive_tol(double tol, const char* op) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument(std::string(op) + ": tolerance must be positive");
    }
}

Complex ipow(Complex base, int e) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

double ipow(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// Moment-matrix minors for the hull test. With m1 = s/2, m2 = p, the matrix is
//   [ 1    conj(m1)  conj(m2) ]
//   [ m1   1         conj(m1) ]
//   [ m2   m1        1        ]
// Leading principal minors: 1, 1 - |m1|^2, and the determinant below.
struct MomentMinors {
    double det2 = 0.0;
    double det3 = 0.0;
};

MomentMinors moment_minors(Complex s, Complex p) {
    const Complex m1 = 0.5 * s;
    const Complex m2 = p;
    const double a1 = std::norm(m1);  // |m1|^2
    const double a2 = std::norm(m2);
    MomentMinors m;
    m.det2 = 1.0 - a1;
    m.det3 = 1.0 - 2.0 * a1 - a2 + 2.0 * (m1 * m1 * std::conj(m2)).real();
    return m;
}

bool moment_positive_definite(Complex s, Complex p) {
    const MomentMinors m = moment_minors(s, p);
    return m.det2 > 0.0 && m.det3 > 0.0;
}

// Scaled-point membership predicates used by the gauge bisection. Each is the
// exact open-set test of the tag, evaluated at (z1/t^d1, z2/t^d2).
bool scaled_member(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                   double t) {
    const double t1 = ipow(t, d.d1);
    const double t2 = ipow(t, d.d2);
    const Complex s = z.z1 / t1;
    const Complex p = z.z2 / t2;
    switch (domain.tag()) {
        case DomainTag::Polydisc:
            return std::max(std::abs(s), std::abs(p)) < domain.radius();
        case DomainTag::Ball:
            return std::sqrt(std::norm(s) + std::norm(p)) < domain.radius();
        case DomainTag::SymmetrizedBidisc: {
            const auto [r1, r2] = quadratic_roots(s, p);
            return std::max(std::abs(r1), std::abs(r2)) < 1.0;
        }
        case DomainTag::ConvHullG2:
            return moment_positive_definite(s, p);
    }
    return false;
}

double bisect_gauge(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                    double tol, double hi) {
    double lo = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (scaled_member(z, domain, d, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// --- curve atoms -----------------------------------------------------------
//
// The extreme points of closure(conv(G2)) lie on the curve
//   C(theta) = (2 e^{i theta}, e^{2 i theta}),
// the symmetrization image of the diagonal of the torus. Scaling the curve by
// the weighted action with |lambda| = rho < 1 gives strictly interior G2 atoms
//   C_rho(theta) = (2 rho e^{i theta}, rho^2 e^{2 i theta}).

std::array<double, 4> curve_atom(double theta, double rho) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
    return {2.0 * rho * c, 2.0 * rho * s, rho * rho * c2, rho * rho * s2};
}

Point2C curve_atom_point(double theta, double rho) {
    return from_real4(curve_atom(theta, rho));
}

// max over the curve of <u, C_rho(theta)>: a two-harmonic trig polynomial.
double curve_support(const std::array<double, 4>& u, double rho, int grid_n,
                     int refine_iters) {
    auto f = [&u, rho](double th) {
        const auto a = curve_atom(th, rho);
        return dot4(u, a);
    };
    return max_on_circle(f, grid_n, refine_iters).value;
}

// --- certificate search -----------------------------------------------------

struct WeightedAtom {
    double theta = 0.0;
    double weight = 0.0;
    std::array<double, 4> vec{};
};

std::array<double, 4> combine(const std::vector<WeightedAtom>& atoms) {
    std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};
    for (const auto& a : atoms) {
        for (int i = 0; i < 4; ++i) x[i] += a.weight * a.vec[i];
    }
    return x;
}

// Reduce a convex combination in R^4 to at most 5 atoms without moving the
// combined point: repeatedly find an affine dependence and shift the weights
// until one of them vanishes.
void caratheodory_reduce(std::vector<WeightedAtom>& atoms) {
    while (atoms.size() > 5) {
        const std::size_t k = atoms.size();
        // rows: the four coordinates plus the all-ones row
        std::vector<std::vector<double>> rows(5, std::vector<double>(k, 0.0));
        for (std::size_t j = 0; j < k; ++j) {
            rows[0][j] = atoms[j].vec[0];
            rows[1][j] = atoms[j].vec[1];
            rows[2][j] = atoms[j].vec[2];
            rows[3][j] = atoms[j].vec[3];
            rows[4][j] = 1.0;
        }
        // Gaussian elimination to find a nullspace vector y (k >= 6 > 5 rows).
        std::array<int, 5> pivot_col{-1, -1, -1, -1, -1};
        std::vector<bool> is_pivot(k, false);
        int rank = 0;
        for (std::size_t col = 0; col < k && rank < 5; ++col) {
            int best = -1;
            double best_abs = 1e-12;
            for (int row = rank; row < 5; ++row) {
                if (std::abs(rows[row][col]) > best_abs) {
                    best = row;
                    best_abs = std::abs(rows[row][col]);
                }
            }
            if (best < 0) continue;
            std::swap(rows[rank], rows[best]);
            const double piv = rows[rank][col];
            for (std::size_t j = 0; j < k; ++j) rows[rank][j] /= piv;
            for (int row = 0; row < 5; ++row) {
                if (row == rank) continue;
                const double f = rows[row][col];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < k; ++j) rows[row][j] -= f * rows[rank][j];
            }
            pivot_col[rank] = static_cast<int>(col);
            is_pivot[col] = true;
            ++rank;
        }
        int free_col = -1;
        for (std::size_t col = 0; col < k; ++col) {
            if (!is_pivot[col]) {
                free_col = static_cast<int>(col);
                break;
            }
        }
        if (free_col < 0) break;  // cannot happen for k > 5; defensive
        std::vector<double> y(k, 0.0);
        y[free_col] = 1.0;
        for (int row = 0; row < rank; ++row) {
            y[pivot_col[row]] = -rows[row][free_col];
        }
        // Shift weights along y until the first one hits zero.
        double t = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < k; ++j) {
            if (y[j] > 1e-15) t = std::min(t, atoms[j].weight / y[j]);
        }
        if (!std::isfinite(t)) {
            for (std::size_t j = 0; j < k; ++j) y[j] = -y[j];
            for (std::size_t j = 0; j < k; ++j) {
                if (y[j] > 1e-15) t = std::min(t, atoms[j].weight / y[j]);
            }
        }
        if (!std::isfinite(t)) break;  // degenerate dependence; defensive
        for (std::size_t j = 0; j < k; ++j) atoms[j].weight -= t * y[j];
        std::erase_if(atoms, [](const WeightedAtom& a) { return a.weight <= 1e-15; });
        double s = 0.0;
        for (auto& a : atoms) s += a.weight;
        for (auto& a : atoms) a.weight /= s;
    }
}

// Away-step Frank-Wolfe projection of z onto the convex hull of the shell
// curve C_rho. The linear minimization runs over the continuous curve, which
// plays the role of an indefinitely refined sample of the extreme set.
std::vector<WeightedAtom> project_onto_shell(const std::array<double, 4>& target,
                                             double rho, const CertSearchBudget& budget,
                                             double* final_residual) {
    std::vector<WeightedAtom> atoms;
    atoms.push_back({0.0, 1.0, curve_atom(0.0, rho)});
    std::array<double, 4> x = atoms[0].vec;

    const double tol2 = budget.residual * budget.residual;
    int it = 0;
    for (; it < budget.max_iterations; ++it) {
        std::array<double, 4> g{};
        double dist2 = 0.0;
        for (int i = 0; i < 4; ++i) {
            g[i] = x[i] - target[i];
            dist2 += g[i] * g[i];
        }
        if (dist2 <= tol2) break;

        auto lin = [&g, rho](double th) { return dot4(g, curve_atom(th, rho)); };
        const CircleMax fw = min_on_circle(lin, budget.lmo_grid, 48);
        const auto s = curve_atom(fw.theta, rho);

        // away atom: the active atom most aligned with the gradient
        std::size_t away = 0;
        double away_val = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double v = dot4(g, atoms[j].vec);
            if (v > away_val) {
                away_val = v;
                away = j;
            }
        }

        const double gap_fw = dot4(g, x) - fw.value;       // -g.(s - x)
        const double gap_aw = away_val - dot4(g, x);       // -g.(x - a)

        if (gap_fw >= gap_aw) {
            std::array<double, 4> dir{};
            double dn2 = 0.0;
            for (int i = 0; i < 4; ++i) {
                dir[i] = s[i] - x[i];
                dn2 += dir[i] * dir[i];
            }
            if (dn2 == 0.0) break;
            const double step = std::clamp(gap_fw / dn2, 0.0, 1.0);
            for (auto& a : atoms) a.weight *= (1.0 - step);
            bool merged = false;
            for (auto& a : atoms) {
                if (std::abs(std::remainder(a.theta - fw.theta, kTwoPi)) < 1e-12) {
                    a.weight += step;
                    merged = true;
                    break;
                }
            }
            if (!merged) atoms.push_back({fw.theta, step, s});
            for (int i = 0; i < 4; ++i) x[i] += step * dir[i];
            if (step == 1.0) {
                atoms.clear();
                atoms.push_back({fw.theta, 1.0, s});
                x = s;
            }
        } else {
            const double alpha = atoms[away].weight;
            if (alpha >= 1.0 - 1e-15) break;  // single-atom hull; no away room
            std::array<double, 4> dir{};
            double dn2 = 0.0;
            for (int i = 0; i < 4; ++i) {
                dir[i] = x[i] - atoms[away].vec[i];
                dn2 += dir[i] * dir[i];
            }
            if (dn2 == 0.0) break;
            const double step_max = alpha / (1.0 - alpha);
            const double step = std::clamp(gap_aw / dn2, 0.0, step_max);
            for (auto& a : atoms) a.weight *= (1.0 + step);
            atoms[away].weight -= step;
            for (int i = 0; i < 4; ++i) x[i] += step * dir[i];
            std::erase_if(atoms, [](const WeightedAtom& a) { return a.weight <= 1e-16; });
        }

        if ((it & 63) == 63) x = combine(atoms);  // resync against weight drift
    }

    x = combine(atoms);
    double dist2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double d = x[i] - target[i];
        dist2 += d * d;
    }
    if (final_residual != nullptr) *final_residual = std::sqrt(dist2);
    return atoms;
}

// Supporting functional of the closed hull read off the moment matrix: for the
// unit eigenvector v of the most negative eigenvalue, the affine map
//   l(s, p) = |v|^2 + Re(s (conj(v1) v0 + conj(v2) v1)) + 2 Re(p conj(v2) v0)
// is nonnegative on the hull and negative at z.
struct Separation {
    std::array<double, 4> direction{};
    double amount = 0.0;  // <u, z> - H(u), positive when separated
};

std::array<Complex, 3> min_eigenvector(Complex s, Complex p) {
    const Complex m1 = 0.5 * s;
    const Complex m2 = p;
    // power iteration on (c I - T); c bounds the spectrum from above
    const double c = 1.0 + 2.0 * std::abs(m1) + std::abs(m2) + 1.0;
    std::array<Complex, 3> v{Complex{1.0, 0.3}, Complex{-0.4, 0.9}, Complex{0.7, -0.2}};
    auto apply = [&](const std::array<Complex, 3>& x) {
        std::array<Complex, 3> y;
        y[0] = c * x[0] - (x[0] + std::conj(m1) * x[1] + std::conj(m2) * x[2]);
        y[1] = c * x[1] - (m1 * x[0] + x[1] + std::conj(m1) * x[2]);
        y[2] = c * x[2] - (m2 * x[0] + m1 * x[1] + x[2]);
        return y;
    };
    for (int it = 0; it < 256; ++it) {
        v = apply(v);
        double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
        if (n == 0.0) {
            v = {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
            n = 1.0;
        }
        for (auto& e : v) e /= n;
    }
    return v;
}

Separation separate_from_hull(const Point2C& z) {
    const auto v = min_eigenvector(z.z1, z.z2);
    const Complex cs = std::conj(v[1]) * v[0] + std::conj(v[2]) * v[1];
    const Complex cp = 2.0 * std::conj(v[2]) * v[0];
    // l(x) = 1 + Re(s cs) + Re(p cp); decreasing direction of l separates z
    std::array<double, 4> u{-cs.real(), cs.imag(), -cp.real(), cp.imag()};
    const double n = norm4(u);
    if (n == 0.0) return {};
    for (auto& e : u) e /= n;
    const double support = curve_support(u, 1.0, 512, 60);
    Separation out;
    out.direction = u;
    out.amount = dot4(u, to_real4(z)) - support;
    return out;
}

}  // namespace

std::pair<Complex, Complex> quadratic_roots(Complex s, Complex p) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || !std::isfinite(p.real()) ||
        !std::isfinite(p.imag())) {
        throw std::invalid_argument("quadratic_roots: non-finite coefficients");
    }
    Complex t1, t2;
    if (s == Complex{} && p == Complex{}) {
        t1 = t2 = Complex{};
    } else {
        Complex sq = std::sqrt(s * s - 4.0 * p);
        if ((std::conj(s) * sq).real() < 0.0) sq = -sq;
        const Complex q = 0.5 * (s + sq);
        t1 = q;
        t2 = (q != Complex{}) ? p / q : s - q;
    }
    auto lex_less = [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    if (lex_less(t2, t1)) std::swap(t1, t2);
    return {t1, t2};
}

MembershipVerdict g2_contains(const Point2C& z, double tol) {
    require_finite(z, "g2_contains");
    require_positive_tol(tol, "g2_contains");
    const auto [r1, r2] = quadratic_roots(z.z1, z.z2);
    const double m = std::max(std::abs(r1), std::abs(r2));
    MembershipVerdict v;
    v.margin = 1.0 - m;
    if (m < 1.0 - tol) {
        v.status = Membership::Inside;
    } else if (m > 1.0 + tol) {
        v.status = Membership::Outside;
    } else {
        v.status = Membership::Boundary;
    }
    return v;
}

std::vector<Point2C> sample_g2(int n) {
    if (n < 2) throw std::invalid_argument("sample_g2: n must be at least 2");
    std::vector<double> radii(n), angles(n);
    for (int i = 0; i < n; ++i) radii[i] = static_cast<double>(i) / (n + 1);
    for (int j = 0; j < n; ++j) angles[j] = kTwoPi * j / n;
    std::vector<Point2C> out;
    out.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    const Complex x = std::polar(radii[i1], angles[j1]);
                    const Complex y = std::polar(radii[i2], angles[j2]);
                    out.push_back(Point2C{x + y, x * y});
                }
    return out;
}

double support_conv_g2(const std::array<double, 4>& direction, int refine_iters) {
    const double n = norm4(direction);
    if (std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("support_conv_g2: direction must be a unit 4-vector");
    }
    if (refine_iters < 0) {
        throw std::invalid_argument("support_conv_g2: refine_iters must be >= 0");
    }
    auto f = [&direction](double a, double b) {
        const Complex x = std::polar(1.0, a);
        const Complex y = std::polar(1.0, b);
        const Complex s = x + y;
        const Complex p = x * y;
        return direction[0] * s.real() + direction[1] * s.imag() + direction[2] * p.real() +
               direction[3] * p.imag();
    };
    // coarse torus grid
    constexpr int kGrid = 96;
    double best = -std::numeric_limits<double>::infinity();
    double ba = 0.0, bb = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const double a = kTwoPi * i / kGrid;
            const double b = kTwoPi * j / kGrid;
            const double v = f(a, b);
            if (v > best) {
                best = v;
                ba = a;
                bb = b;
            }
        }
    }
    // pattern refinement; the running maximum never decreases
    double step = kTwoPi / kGrid;
    for (int it = 0; it < refine_iters; ++it) {
        bool improved = false;
        const double ca = ba, cb = bb;
        const std::array<std::pair<double, double>, 8> moves{
            {{step, 0.0},
             {-step, 0.0},
             {0.0, step},
             {0.0, -step},
             {step, step},
             {step, -step},
             {-step, step},
             {-step, -step}}};
        for (const auto& [da, db] : moves) {
            const double v = f(ca + da, cb + db);
            if (v > best) {
                best = v;
                ba = ca + da;
                bb = cb + db;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

double support_conv_g2_curve(const std::array<double, 4>& direction, int grid_n,
                             int refine_iters) {
    return curve_support(direction, 1.0, grid_n, refine_iters);
}

bool conv_g2_member(const Point2C& z) {
    require_finite(z, "conv_g2_member");
    return moment_positive_definite(z.z1, z.z2);
}

double conv_g2_moment_margin(const Point2C& z) {
    require_finite(z, "conv_g2_moment_margin");
    // smallest eigenvalue of the 3x3 Hermitian moment matrix, closed form
    const Complex m1 = 0.5 * z.z1;
    const Complex m2 = z.z2;
    const double q = 1.0;  // tr/3
    const double p1 = 2.0 * std::norm(m1) + std::norm(m2);
    if (p1 == 0.0) return 1.0;
    const double p2 = 2.0 * p1;  // diagonal entries equal the trace mean
    const double pp = std::sqrt(p2 / 6.0);
    // det((T - q I)/pp): T - I has zero diagonal
    const Complex a = std::conj(m1), b = std::conj(m2);
    // det of [[0, a, b], [conj(a), 0, a], [conj(b), conj(a), 0]]
    const double detb =
        (a * (a * std::conj(b)) + b * (std::conj(a) * std::conj(a))).real();
    const double r = std::clamp(detb / (2.0 * pp * pp * pp), -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    return q + 2.0 * pp * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
}

double conv_g2_gauge(const Point2C& z, double tol) {
    require_finite(z, "conv_g2_gauge");
    require_positive_tol(tol, "conv_g2_gauge");
    if (z == Point2C{}) return 0.0;
    const DomainSpec hull = DomainSpec::conv_hull_g2();
    const DegreeVector d{1, 2};
    double hi = kBisectionBracket;
    int doublings = 0;
    while (!scaled_member(z, hull, d, hi)) {
        hi *= 2.0;
        if (++doublings > 60) {
            throw BracketingFailed("conv_g2_gauge: gauge exceeds any finite bracket");
        }
    }
    return bisect_gauge(z, hull, d, tol, hi);
}

MembershipVerdict conv_g2_contains(const Point2C& z, double tol,
                                   const CertSearchBudget& budget) {
    require_finite(z, "conv_g2_contains");
    require_positive_tol(tol, "conv_g2_contains");

    const double h = conv_g2_gauge(z, std::min(tol, 1e-10));
    MembershipVerdict v;
    v.margin = 1.0 - h;

    if (v.margin > tol) {
        v.status = Membership::Inside;
        // atoms strictly between the point's own shell and the boundary, so
        // every certificate point keeps a positive G2 margin of 0.65 (1 - h)
        const double shell = h + 0.35 * (1.0 - h);
        double residual = 0.0;
        auto atoms = project_onto_shell(to_real4(z), shell, budget, &residual);
        if (residual > budget.residual) {
            throw CertificateSearchFailed(
                "conv_g2_contains: certificate residual " + std::to_string(residual) +
                " above target after " + std::to_string(budget.max_iterations) +
                " iterations; widen the budget or the tolerance");
        }
        caratheodory_reduce(atoms);
        std::vector<CertificateAtom> cert;
        cert.reserve(atoms.size());
        for (const auto& a : atoms) {
            cert.push_back({a.weight, curve_atom_point(a.theta, shell)});
        }
        v.certificate = std::move(cert);
        return v;
    }

    if (v.margin < -tol) {
        const Separation sep = separate_from_hull(z);
        if (!(sep.amount > 0.0)) {
            throw CertificateSearchFailed(
                "conv_g2_contains: no separating direction found for an outside point");
        }
        v.status = Membership::Outside;
        return v;
    }

    v.status = Membership::Boundary;
    return v;
}

Point2C d_action(const Point2C& z, Complex lambda, const DegreeVector& d) {
    require_finite(z, "d_action");
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
        throw std::invalid_argument("d_action: non-finite scale");
    }
    return Point2C{ipow(lambda, d.d1) * z.z1, ipow(lambda, d.d2) * z.z2};
}

double d_minkowski(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                   double tol) {
    require_finite(z, "d_minkowski");
    require_positive_tol(tol, "d_minkowski");
    if (!domain.is_d_balanced(d)) {
        throw std::invalid_argument("d_minkowski: domain '" + domain.name() +
                                    "' is not balanced for the given exponents");
    }
    if (z == Point2C{}) return 0.0;
    if (!scaled_member(z, domain, d, kBisectionBracket)) {
        throw BracketingFailed(
            "d_minkowski: point still outside at the bracket bound; misconfigured domain");
    }
    return bisect_gauge(z, domain, d, tol, kBisectionBracket);
}

bool d_sublevel_contains(const Point2C& z, const DomainSpec& domain, const DegreeVector& d,
                         double level, double tol) {
    if (!(level > 0.0 && level <= 1.0)) {
        throw std::invalid_argument("d_sublevel_contains: level must lie in (0, 1]");
    }
    return d_minkowski(z, domain, d, tol) < level - tol;
}

MembershipVerdict domain_contains(const DomainSpec& domain, const Point2C& z) {
    require_finite(z, "domain_contains");
    const double tol = domain.tolerance();
    auto verdict_from_margin = [tol](double margin) {
        MembershipVerdict v;
        v.margin = margin;
        v.status = margin > tol    ? Membership::Inside
                   : margin < -tol ? Membership::Outside
                                   : Membership::Boundary;
        return v;
    };
    switch (domain.tag()) {
        case DomainTag::SymmetrizedBidisc:
            return g2_contains(z, tol);
        case DomainTag::Polydisc:
            return verdict_from_margin(
                1.0 - std::max(std::abs(z.z1), std::abs(z.z2)) / domain.radius());
        case DomainTag::Ball:
            return verdict_from_margin(
                1.0 - dist2c(z, domain.center()) / domain.radius());
        case DomainTag::ConvHullG2: {
            double h;
            try {
                h = conv_g2_gauge(z, std::min(tol, 1e-10));
            } catch (const BracketingFailed&) {
                return verdict_from_margin(-std::numeric_limits<double>::infinity());
            }
            return verdict_from_margin(1.0 - h);
        }
    }
    throw std::logic_error("domain_contains: unknown tag");
}

double polydisc_gauge_closed_form(const Point2C& z, double radius, const DegreeVector& d) {
    require_finite(z, "polydisc_gauge_closed_form");
    if (!(radius > 0.0)) {
        throw std::invalid_argument("polydisc_gauge_closed_form: radius must be positive");
    }
    const double g1 = std::pow(std::abs(z.z1) / radius, 1.0 / d.d1);
    const double g2 = std::pow(std::abs(z.z2) / radius, 1.0 / d.d2);
    return std::max(g1, g2);
}

}  // namespace squeeze_lab
