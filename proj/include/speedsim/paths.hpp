// paths.hpp - path functionals (first-passage / exit times) and ensemble
// statistics, including two-sample distances between path laws.
#pragma once

#include <optional>
#include <vector>

#include "speedsim/simulate.hpp"

namespace speedsim {

// Path value at time t (piecewise-constant hold of the recorded samples).
double value_at(const Path& p, double t);

// First recorded time with value >= level (upper) or <= level (lower);
// nullopt if the path never passes within its horizon.  On discrete paths
// the open/closed threshold variants coincide; this is the >= / <= version.
std::optional<double> first_passage(const Path& p, double level, bool upper);

struct ExitStats {
    double a = 0, b = 0, x0 = 0;
    int n = 0;
    double p_hit_upper = 0, p_hit_upper_se = 0;
    double mean_exit = 0, mean_exit_se = 0;
    double second_moment_exit = 0, second_moment_exit_se = 0;
    int censored_count = 0;  // paths that never exited; excluded from moments
};

// Exit statistics of (a, b) from x0.  Censored paths count as non-hits in
// p_hit_upper and are excluded from the moment estimates.
// Throws std::invalid_argument if the ensemble does not start at x0 or the
// window does not contain x0.
ExitStats exit_stats(const PathEnsemble& ens, double a, double b, double x0);

// Same statistics from run-to-exit samples (no censoring).
ExitStats exit_stats_from_samples(const std::vector<ExitSample>& samples, double a, double b, double x0);

// Classical two-sample Kolmogorov-Smirnov statistic.  Throws on empty input.
double ks_distance(std::vector<double> sample1, std::vector<double> sample2);

// Functional family for path-law comparison: marginals X_t at fractions of
// the horizon, the running supremum, and the exit time from a reference
// window.
struct LawFunctionals {
    std::vector<double> value_times;  // absolute times
    bool include_sup = true;
    double exit_a = 0, exit_b = 0;  // reference exit window (disabled if equal)

    bool has_exit() const { return exit_b > exit_a; }
};

// Default family: X at {T/4, T/2, T}, sup over [0, T], exit from the central
// window covering 80% of the distance from x0 to each finite endpoint
// (4*sqrt(T) toward an infinite endpoint).
LawFunctionals default_law_functionals(double horizon, const Interval& J, double x0);

// Per-functional samples of an ensemble; exit-time censor counts reported.
struct FunctionalSamples {
    std::vector<std::vector<double>> values;  // one vector per functional
    int exit_censored = 0;
    int n = 0;
};

FunctionalSamples extract_functionals(const PathEnsemble& ens, const LawFunctionals& fns);
// Streaming accumulation variant (pairs with for_each_chain_path).
void accumulate_functionals(const Path& p, const LawFunctionals& fns, std::vector<double>& row);

// max over the family of ks_distance between the two ensembles' samples.
// Throws std::invalid_argument on horizon mismatch.
double law_distance(const PathEnsemble& ens1, const PathEnsemble& ens2, const LawFunctionals& fns);
double law_distance(const FunctionalSamples& s1, const FunctionalSamples& s2);

}  // namespace speedsim
