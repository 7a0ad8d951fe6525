#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Effective run parameters. Precedence: CLI flags over config-file values
/// over the defaults below.
struct RunConfig {
    double r = 0.4;
    double eps = 0.05;
    double tol = kGaugeTol;
    int tau_grid = 512;
    int tau_refine = 40;
    int k_density = 64;
    int slice_points = 24;  // radii sampled on the slice annulus
    int slice_angles = 3;
    std::uint64_t seed = 42;
    std::string out_dir;        // empty: fall back to SQUEEZE_LAB_OUT, then "out"
    double corrupt_beta = 0.0;  // test hook: offsets beta inside the identity check

    void validate() const;  // UsageError on violated invariants
    std::string resolved_out_dir() const;
    CounterexampleConfig counterexample() const;
};

/// Apply `key = value` lines from a plain config file ('#' starts a comment).
/// Unknown keys raise UsageError naming the offender.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Parse the shared flag set (including --config) from an argv-style vector,
/// validate, and return the effective configuration.
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace squeeze_lab
