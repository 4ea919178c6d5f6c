// converge.hpp - executable convergence experiments: speed-measure-sense
// checks over test-function families, the forward (time-change) direction
// via simulated path laws, and the converse direction via estimated
// measures.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speedsim/estimate.hpp"
#include "speedsim/measures.hpp"
#include "speedsim/paths.hpp"

namespace speedsim {

struct IndexResult {
    int n;            // sequence label
    double distance;  // discrepancy at this index
    std::string details;
};

struct ConvergenceReport {
    enum class Mode { speed_sense, stone_forward, converse };
    Mode mode;
    std::vector<IndexResult> per_index;  // sorted by n
    bool verdict = false;
    double tolerance = 0;
    double noise_floor = 0;  // stone_forward: same-measure/different-seed baseline
    bool hypothesis_ok = true;
    std::uint64_t seed = 0;
    double runtime_seconds = 0;
    std::string notes;
};

const char* to_string(ConvergenceReport::Mode m);

struct SpeedSenseConfig {
    int interior_K = 64;
    int boundary_K = 4;
};

// Evaluates the interior hat family and, at closed endpoints, the boundary
// ramp families.  Verdict: the discrepancy at the largest index is < tol and
// the last three discrepancies are nonincreasing.
ConvergenceReport speed_sense_check(const std::vector<SpeedMeasure>& seq, const SpeedMeasure& m0,
                                    double tol, const std::vector<int>& labels = {},
                                    const SpeedSenseConfig& cfg = {});

struct StoneConfig {
    double x0 = 0;
    double horizon = 1.5;
    int n_paths = 10000;
    double grid_h = 0.02;
    std::uint64_t seed = 1;
    int threads = 1;
    // chain window for unbounded J (ignored when J is bounded)
    double window_lo = 0, window_hi = 0;
    // start-point drift x^n = x0 + drift/n (the moving-start hypothesis)
    bool start_drift = false;
    double start_drift_scale = 0.1;
    double speed_tol = 0.05;  // tolerance of the hypothesis pre-check
    std::vector<int> labels;
};

// Simulates every measure from x0 and compares path laws with the limit
// ensemble through the fixed functional family.  The noise floor is the
// law distance between two limit ensembles with different seeds; verdict:
// final distance < 2 * floor and nonincreasing over the last three indices.
ConvergenceReport stone_forward(const std::vector<SpeedMeasure>& seq, const SpeedMeasure& m0,
                                const StoneConfig& cfg);

struct ConverseConfig {
    double grid_from = 0, grid_to = 0;  // estimation grid (defaults to J)
    double grid_h = 0.05;
    double chain_h = 0;  // sampler grid; defaults to grid_h / 4
    int n_per_node = 10000;
    int n_boundary = 0;  // boundary-atom sample size; 0 disables boundary estimation
    double tol = 0.1;
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<int> labels;
};

// Simulates each measure, estimates it back, and runs speed_sense_check on
// the estimated sequence against the estimated limit.
ConvergenceReport converse_experiment(const std::vector<SpeedMeasure>& seq, const SpeedMeasure& m0,
                                      const ConverseConfig& cfg);

}  // namespace speedsim
