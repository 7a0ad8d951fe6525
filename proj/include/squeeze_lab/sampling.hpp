#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Deterministic sample stream. Uniform doubles are derived from the raw
/// 64-bit output so sequences are identical across standard libraries.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : rng_(seed) {}

    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double angle() { return 2.0 * std::numbers::pi * uniform01(); }

    Complex disc_point(double max_radius) {
        // area-uniform in the disc of the given radius
        const double r = max_radius * std::sqrt(uniform01());
        return std::polar(r, angle());
    }

    /// A symmetrization image of two independent disc points; strictly inside G2.
    Point2C g2_point(double max_radius = 0.95) {
        const Complex x = disc_point(max_radius);
        const Complex y = disc_point(max_radius);
        return Point2C{x + y, x * y};
    }

    /// Convex combination of up to k G2 points; strictly inside the hull.
    Point2C hull_point(int k = 3, double max_radius = 0.95) {
        double wsum = 0.0;
        Point2C acc;
        for (int i = 0; i < k; ++i) {
            const double w = uniform01() + 1e-9;
            const Point2C p = g2_point(max_radius);
            acc.z1 += w * p.z1;
            acc.z2 += w * p.z2;
            wsum += w;
        }
        acc.z1 /= wsum;
        acc.z2 /= wsum;
        return acc;
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

}  // namespace squeeze_lab
