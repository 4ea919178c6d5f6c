// estimate.hpp - recovery of a speed measure from path data.  The Green
// identity E_x[exit] = int G dm is inverted cell-by-cell by one-point
// collocation: m(cell_i) ~ mean exit time from (y_{i-1}, y_{i+1}) started at
// y_i, divided by G(y_i, y_i).
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "speedsim/simulate.hpp"

namespace speedsim {

// Simulation handle the estimator drives; implementations must be
// deterministic in the seed.
class ExitSampler {
  public:
    virtual ~ExitSampler() = default;
    // Samples of the first exit time of (a, b) started at x0.
    virtual std::vector<ExitSample> exit_from(double a, double b, double x0, int n,
                                              std::uint64_t seed) const = 0;
    // First passage of `level` from x0 within `horizon` (boundary side runs).
    virtual std::vector<PassageSample> passage(double x0, double level, double horizon, int n,
                                               std::uint64_t seed) const = 0;
    virtual const Interval& domain() const = 0;
};

// Chain-engine sampler: builds a fresh aligned grid chain per window.
class ChainExitSampler : public ExitSampler {
  public:
    ChainExitSampler(SpeedMeasure m, double node_h, int threads = 1);

    std::vector<ExitSample> exit_from(double a, double b, double x0, int n,
                                      std::uint64_t seed) const override;
    std::vector<PassageSample> passage(double x0, double level, double horizon, int n,
                                       std::uint64_t seed) const override;
    const Interval& domain() const override { return m_.interval; }

  private:
    SpeedMeasure m_;
    double node_h_;
    int threads_;
};

// Piecewise-constant density estimate on the cells around interior grid
// nodes, with standard errors propagated from the exit-time means.
struct InteriorEstimate {
    std::vector<double> grid;             // y_0 < ... < y_k
    std::vector<double> node;             // interior nodes y_1..y_{k-1}
    std::vector<double> cell_lo, cell_hi; // cell around each interior node
    std::vector<double> cell_mass, cell_mass_se;
    std::vector<double> density, density_se;

    // The estimate as a speed measure on [grid.front(), grid.back()] (closed),
    // edge cells extended to the grid ends, with the given boundary weights.
    SpeedMeasure as_measure(double left_weight, double right_weight) const;
};

// Runs the sampler at every interior node.  Throws std::invalid_argument on
// a degenerate grid or n_per_node <= 0 ("insufficient samples").
InteriorEstimate estimate_interior(const ExitSampler& sim, const std::vector<double>& grid,
                                   int n_per_node, std::uint64_t seed);

struct BoundaryAtomEstimate {
    double weight;  // clipped at 0
    double se;
};

// Boundary atom from the reflected Green identity:
// w ~ (E_l[gamma_b] - int G_[l,b)(l, y) m_hat(dy)) / (b - l).
// Throws std::runtime_error when the side behaves absorbingly (passage times
// do not concentrate below the horizon).
BoundaryAtomEstimate estimate_boundary_atom(const ExitSampler& sim, Side side, double b, int n,
                                            std::uint64_t seed, const InteriorEstimate& interior);

// True iff empirical P_l(tau_b^+ > t) > 1 - eps.  Defaults: t chosen by the
// caller (suggested 10*(b-l)^2), eps = 1e-3.
bool detect_absorbing(const ExitSampler& sim, Side side, double b, double t, int n,
                      std::uint64_t seed, double eps = 1e-3);

}  // namespace speedsim
