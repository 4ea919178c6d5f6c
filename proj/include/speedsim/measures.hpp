// measures.hpp - state intervals and speed measures with exact integration,
// validation and measure-distance primitives.
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "speedsim/poly.hpp"

namespace speedsim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Side { left, right };

// State interval J.  Endpoints may be infinite, in which case they are open.
struct Interval {
    double left = -kInf;
    double right = kInf;
    bool left_closed = false;
    bool right_closed = false;

    bool bounded() const { return left > -kInf && right < kInf; }
    // x in J (endpoint membership per closedness flags).
    bool contains(double x) const;
    // x in the open interior (left, right).
    bool interior_contains(double x) const { return x > left && x < right; }
};

// Query window for integrate/mass.  Degenerate regions (lo == hi) are
// allowed and pick up atoms sitting exactly there.
struct Region {
    double lo;
    double hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Region closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Region open(double lo, double hi) { return {lo, hi, false, false}; }
    bool contains(double x) const;
};

// Density piece f(x)dx on [from, to].  `from`/`to` may be infinite at the
// matching end of an unbounded interval; the polynomial must be >= 0 there.
struct DensityPiece {
    double from;
    double to;
    Poly density;
};

struct Atom {
    double at;
    double weight;
};

// Speed measure on J: piecewise-polynomial density on the interior, finitely
// many interior atoms, and weights at closed boundary points.  A boundary
// weight of +infinity encodes an absorbing boundary.
struct SpeedMeasure {
    Interval interval;
    std::vector<DensityPiece> pieces;
    std::vector<Atom> atoms;
    std::optional<double> left_boundary_weight;
    std::optional<double> right_boundary_weight;

    double left_weight_or0() const { return left_boundary_weight.value_or(0.0); }
    double right_weight_or0() const { return right_boundary_weight.value_or(0.0); }
};

// A violated invariant.  Violations are data, not failures.
struct Violation {
    std::string invariant;
    double location;
    std::string detail;
};

// Checks every SpeedMeasure invariant; empty result means the measure is a
// valid speed measure.  Positivity of densities is audited on a fixed grid
// of 1024 points per piece plus endpoints; improper integrals (endpoint
// admissibility, local finiteness) are decided symbolically on the
// polynomial pieces.
std::vector<Violation> validate(const SpeedMeasure& m);

// Continuous piecewise polynomial test function, zero off its pieces.
struct FnPiece {
    double from;
    double to;
    Poly p;
};

class PiecewiseFn {
  public:
    PiecewiseFn() = default;
    explicit PiecewiseFn(std::vector<FnPiece> pieces);

    double operator()(double x) const;
    double sup_norm() const { return sup_norm_; }
    double support_lo() const;
    double support_hi() const;
    const std::vector<FnPiece>& pieces() const { return pieces_; }

  private:
    std::vector<FnPiece> pieces_;  // sorted, non-overlapping
    double sup_norm_ = 0.0;
};

// Tent of height 1 on (a, b) with peak at `peak`.
PiecewiseFn hat_fn(double a, double peak, double b);
// 1 at `from` decaying linearly to 0 at `to` (boundary test function).
PiecewiseFn ramp_fn(double from, double to);

// Deterministic truncated test-function families for convergence checks.
struct TestFamily {
    enum class Kind { interior, left_boundary, right_boundary };
    Kind kind;
    std::vector<PiecewiseFn> fns;
};

// Compactly supported hats on the interior, supports on a dyadic grid
// exhausting J (windows refine and, on unbounded intervals, expand).
TestFamily interior_family(const Interval& J, int K = 64);
// Ramps with f(endpoint) = 1 > 0 and support shrinking toward the closed
// endpoint (the families of Definition parts (b)/(c)).
TestFamily left_boundary_family(const Interval& J, int K = 4);
TestFamily right_boundary_family(const Interval& J, int K = 4);

// integral of f against m over `region` (must be contained in J's closure).
// Includes atom and boundary-weight contributions; an infinite weight inside
// the region yields +infinity whenever f > 0 there.
double integrate(const SpeedMeasure& m, const PiecewiseFn& f, const Region& region);

// m(region): integrate with f == 1.
double mass(const SpeedMeasure& m, const Region& region);

// max_f |int f dm1 - int f dm2| / (1 + sup|f|) over the family.
// Throws std::invalid_argument on mismatched intervals.
double vague_distance(const SpeedMeasure& m1, const SpeedMeasure& m2, const TestFamily& family);

}  // namespace speedsim
