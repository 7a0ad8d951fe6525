#pragma once

#include <cmath>
#include <numbers>

namespace squeeze_lab {

struct CircleMax {
    double value = 0.0;
    double theta = 0.0;
};

/// Maximize f over [0, 2pi): uniform n-point scan, then golden-section refinement
/// around the best sample. The returned value is the best evaluation ever seen,
/// so it is monotone in both n (for nested grids) and refine_iters.
template <typename F>
CircleMax max_on_circle(const F& f, int n, int refine_iters) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double step = two_pi / n;

    CircleMax best{-std::numeric_limits<double>::infinity(), 0.0};
    for (int j = 0; j < n; ++j) {
        const double t = j * step;
        const double v = f(t);
        if (v > best.value) best = {v, t};
    }

    // Golden-section on the bracket [best - step, best + step].
    constexpr double gr = 0.6180339887498949;
    double a = best.theta - step;
    double b = best.theta + step;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    auto consider = [&best](double v, double t) {
        if (v > best.value) best = {v, t};
    };
    consider(f1, x1);
    consider(f2, x2);
    for (int it = 0; it < refine_iters; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
            consider(f2, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
            consider(f1, x1);
        }
    }

    best.theta = std::remainder(best.theta, two_pi);
    if (best.theta < 0.0) best.theta += two_pi;
    return best;
}

template <typename F>
CircleMax min_on_circle(const F& f, int n, int refine_iters) {
    auto neg = [&f](double t) { return -f(t); };
    CircleMax m = max_on_circle(neg, n, refine_iters);
    return {-m.value, m.theta};
}

}  // namespace squeeze_lab
