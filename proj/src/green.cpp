#include "speedsim/green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace speedsim {

double green(const GreenWindow& w, double x, double y) {
    if (!(w.a < w.b)) throw std::domain_error("green: window endpoints out of order");
    if (x < w.a || x > w.b || y < w.a || y > w.b)
        throw std::domain_error("green: argument outside the window");
    const double lo = std::min(x, y), hi = std::max(x, y);
    switch (w.kind) {
        case GreenKind::open:
            return (lo - w.a) * (w.b - hi) / (w.b - w.a);
        case GreenKind::left_reflected:
            return w.b - hi;
        case GreenKind::right_reflected:
            return lo - w.a;
    }
    return 0.0;
}

PiecewiseFn green_section(const GreenWindow& w, double x) {
    if (x < w.a || x > w.b) throw std::domain_error("green_section: x outside the window");
    std::vector<FnPiece> pieces;
    switch (w.kind) {
        case GreenKind::open: {
            const double span = w.b - w.a;
            // y <= x: (y - a)(b - x)/span ; y >= x: (x - a)(b - y)/span
            if (x > w.a)
                pieces.push_back({w.a, x, Poly::linear(-w.a * (w.b - x) / span, (w.b - x) / span)});
            if (x < w.b)
                pieces.push_back({x, w.b, Poly::linear(w.b * (x - w.a) / span, -(x - w.a) / span)});
            break;
        }
        case GreenKind::left_reflected: {
            // y <= x: b - x ; y >= x: b - y
            if (x > w.a) pieces.push_back({w.a, x, Poly::constant(w.b - x)});
            if (x < w.b) pieces.push_back({x, w.b, Poly::linear(w.b, -1.0)});
            break;
        }
        case GreenKind::right_reflected: {
            // y <= x: y - a ; y >= x: x - a
            if (x > w.a) pieces.push_back({w.a, x, Poly::linear(-w.a, 1.0)});
            if (x < w.b) pieces.push_back({x, w.b, Poly::constant(x - w.a)});
            break;
        }
    }
    return PiecewiseFn(std::move(pieces));
}

double expected_exit_time(const SpeedMeasure& m, const GreenWindow& w, double x) {
    if (w.a < m.interval.left || w.b > m.interval.right)
        throw std::domain_error("expected_exit_time: window not inside the state interval");
    if (x < w.a || x > w.b) throw std::domain_error("expected_exit_time: x outside the window");
    // Degenerate sections (x at a killed endpoint) integrate to zero anyway.
    PiecewiseFn section = green_section(w, x);
    if (section.pieces().empty()) return 0.0;
    Region region{w.a, w.b, true, true};
    return integrate(m, section, region);
}

}  // namespace speedsim
