// fixtures.hpp - canonical measures and measure sequences used by tests and
// experiments, plus piecewise-polynomial surrogates for exponential and
// Gaussian densities (cubic Hermite pieces, sup-norm error <= tol).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "speedsim/measures.hpp"

namespace speedsim {
namespace fixtures {

// amplitude * exp(-rate * (x - lo)) on [lo, hi], adaptive knots.
std::vector<DensityPiece> exp_decay_pieces(double amplitude, double rate, double lo, double hi,
                                           double tol = 1e-4);

// Normal(mean, variance) density restricted to [lo, hi], uniform knots.
std::vector<DensityPiece> gaussian_pieces(double mean, double variance, double lo, double hi,
                                          double tol = 1e-4);

// Max |pieces - f| sampled densely (surrogate quality check).
double sup_error(const std::vector<DensityPiece>& pieces, const std::function<double(double)>& f,
                 int samples_per_piece = 64);

// scale * Lebesgue on J (closed endpoints get weight 0); unbounded ends are
// covered by unbounded constant pieces.
SpeedMeasure lebesgue(double scale, const Interval& J);

// 2 * Lebesgue on [0,1], both endpoints reflecting with weight 0 (the law of
// Brownian motion reflected at 0 and 1).
SpeedMeasure brownian01();

SpeedMeasure with_atom(SpeedMeasure m, double at, double weight);
SpeedMeasure with_left_weight(SpeedMeasure m, double w);
SpeedMeasure with_right_weight(SpeedMeasure m, double w);
SpeedMeasure rescaled(const SpeedMeasure& m, double factor);

// dx with tail density |x|^-3 beyond |x| >= cut, on R ("dx / (|x|^3 v 1)").
SpeedMeasure cubic_tail_measure();

// A convergence fixture: measures m^1.. with limit m^0, sequence labels, and
// the parameters the experiments run with.
struct FixtureSequence {
    std::string name;
    std::vector<SpeedMeasure> seq;
    SpeedMeasure limit;
    std::vector<int> labels;
    double x0;
    double speed_tol;
    double horizon;
    double grid_h;
    int n_paths;
    double window_lo = 0, window_hi = 0;  // chain window when J unbounded
    bool start_drift = false;
};

// All convergence fixtures, including the interior-atom sequence
// 2Leb + (1/n) delta_{1/2}, the scale sequence (1+1/n) 2Leb, the boundary
// spike sequence dx + n e^{-nx} -> dx + delta_0 on [0, inf), the Gaussian
// sequence dx + N(0, 1/n) -> dx + delta_0 on R, and power-law tail
// sequences on R.
std::vector<FixtureSequence> convergence_fixtures();

}  // namespace fixtures
}  // namespace speedsim
