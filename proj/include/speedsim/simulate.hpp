// simulate.hpp - two independent path-generation engines for the diffusion
// with a given speed measure: (A) an event-driven birth-death grid chain,
// (B) a time change of a Brownian driver through the occupation clock
// T_t = int L(t,y) m(dy), S = right-continuous inverse of T, X = driver(S).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "speedsim/green.hpp"
#include "speedsim/measures.hpp"

namespace speedsim {

enum class BoundaryTag { reflecting, absorbing };

// Grid discretization of a diffusion.  Interior nodes jump up with
// probability (x_i - x_{i-1})/(x_{i+1} - x_{i-1}) (natural scale) after an
// exponential holding time whose mean is the exact expected exit time of the
// two-neighbour window under m.
struct BirthDeathChain {
    std::vector<double> nodes;
    std::vector<double> up_prob;       // per node; 1 at a reflecting left end, 0 at a reflecting right end
    std::vector<double> mean_holding;  // +infinity at absorbing nodes
    BoundaryTag left_tag = BoundaryTag::reflecting;
    BoundaryTag right_tag = BoundaryTag::reflecting;
    std::string measure_digest;

    std::size_t size() const { return nodes.size(); }
    // Index of the node nearest to x.
    std::size_t nearest_node(double x) const;
};

// Uniform grid over J (bounded J required).  Throws on invalid measure or
// h <= 0.
BirthDeathChain build_grid_chain(const SpeedMeasure& m, double h);
// Uniform grid over [window_lo, window_hi] intersected with J.  Window cuts
// strictly inside J become reflecting nodes (statistics of paths that stay
// inside the window are unaffected).
BirthDeathChain build_grid_chain(const SpeedMeasure& m, double h, double window_lo, double window_hi);
// Explicit sorted node list.
BirthDeathChain build_grid_chain(const SpeedMeasure& m, std::vector<double> nodes);

struct Path {
    std::vector<double> times;   // increasing from 0
    std::vector<double> values;  // same length; piecewise-constant hold between entries
    std::uint64_t seed = 0;
};

enum class Engine { chain, timechange };

struct PathEnsemble {
    std::vector<Path> paths;
    std::string measure_digest;
    Engine engine = Engine::chain;
    std::uint64_t master_seed = 0;
    double horizon = 0;
    double x0 = 0;  // actual (snapped) start point
    // step parameters (whichever apply to the engine)
    double grid_h = 0;
    double dt = 0;
    double bin = 0;
};

// Event-driven continuous-time run of the chain, one Path per seed stream,
// recorded at jump times and truncated at `horizon`.  Deterministic in
// (chain, x0, horizon, n_paths, master_seed) for any `threads`.
PathEnsemble run_chain(const BirthDeathChain& chain, double x0, double horizon, int n_paths,
                       std::uint64_t master_seed, int threads = 1);

// Runs the chain paths without materializing the ensemble; `consume` is
// called once per path index i (concurrently for disjoint i).
void for_each_chain_path(const BirthDeathChain& chain, double x0, double horizon, int n_paths,
                         std::uint64_t master_seed, int threads,
                         const std::function<void(int, const Path&)>& consume);

// Time-change engine.  The driver is Brownian with step dt, reflected at
// closed boundaries; the local-time field is estimated by occupation binning
// with occupation density = 2L, so m = 2*Lebesgue reproduces the driver.
// Output on a uniform grid of `out_samples` steps per horizon.  An absorbing
// boundary freezes the path exactly at the hit.
PathEnsemble run_timechange(const SpeedMeasure& m, double x0, double horizon, int n_paths, double dt,
                            double bin, std::uint64_t master_seed, int threads = 1, int out_samples = 1024);

// Run-to-exit samplers: first exit of (a, b) started at x0 (a <= x0 <= b).
struct ExitSample {
    double time;
    bool hit_upper;
};

std::vector<ExitSample> chain_exit_samples(const BirthDeathChain& chain, double x0, double a, double b,
                                           int n, std::uint64_t master_seed, int threads = 1);

std::vector<ExitSample> timechange_exit_samples(const SpeedMeasure& m, double x0, double a, double b,
                                                int n, double dt, double bin, std::uint64_t master_seed,
                                                int threads = 1);

// First passage of `level` from below within `horizon` (chain run-to-event):
// used for boundary-atom estimation and absorption detection.
struct PassageSample {
    bool passed;
    double time;  // passage time when passed, else horizon
};

std::vector<PassageSample> chain_passage_samples(const BirthDeathChain& chain, double x0, double level,
                                                 double horizon, int n, std::uint64_t master_seed,
                                                 int threads = 1);

// Deterministic digest of the measure (FNV-1a over the canonical JSON form).
std::string measure_digest(const SpeedMeasure& m);

// Shared helper: runs fn(i) for i in [0, n) over `threads` workers with a
// deterministic contiguous split.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace speedsim
