// green.hpp - closed-form Green functions on natural scale and exact
// expected exit times int G dm.
//
// Normalization: standard Brownian motion has speed measure 2*Lebesgue, so
// int G_(a,b)(x,y) * 2 dy = (x-a)(b-x), the classical Brownian exit time.
#pragma once

#include "speedsim/measures.hpp"

namespace speedsim {

enum class GreenKind { open, left_reflected, right_reflected };

// Window the Green function lives on: open -> (a,b) killed at both ends;
// left_reflected -> [a,b) with a a closed reflecting endpoint; right_reflected
// symmetric.
struct GreenWindow {
    GreenKind kind;
    double a;
    double b;

    static GreenWindow open(double a, double b) { return {GreenKind::open, a, b}; }
    static GreenWindow left_reflected(double l, double b) { return {GreenKind::left_reflected, l, b}; }
    static GreenWindow right_reflected(double a, double r) { return {GreenKind::right_reflected, a, r}; }
};

// G(x, y).  open: (min(x,y)-a)(b-max(x,y))/(b-a); left_reflected: b-max(x,y);
// right_reflected: min(x,y)-a.  Symmetric in (x,y), zero at killed endpoints.
// Throws std::domain_error if x or y is outside the closed window.
double green(const GreenWindow& w, double x, double y);

// E_x[exit time of the window] = int G(x, .) dm, computed exactly, including
// atoms and (for reflected windows) the boundary weight.  +infinity when an
// absorbing boundary atom contributes with positive Green value.
double expected_exit_time(const SpeedMeasure& m, const GreenWindow& w, double x);

// G(x, .) restricted to the window as a piecewise polynomial in y.
PiecewiseFn green_section(const GreenWindow& w, double x);

}  // namespace speedsim
