#include "speedsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace speedsim {

bool Interval::contains(double x) const {
    if (x < left || x > right) return false;
    if (x == left) return left_closed;
    if (x == right) return right_closed;
    return true;
}

bool Region::contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

// ---------------------------------------------------------------------------
// piecewise test functions

PiecewiseFn::PiecewiseFn(std::vector<FnPiece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const FnPiece& a, const FnPiece& b) { return a.from < b.from; });
    // sampled sup norm; exact for the piecewise-linear functions we build
    double s = 0.0;
    for (const auto& pc : pieces_) {
        for (int k = 0; k <= 32; ++k) {
            double x = pc.from + (pc.to - pc.from) * k / 32.0;
            s = std::max(s, std::abs(pc.p(x)));
        }
    }
    sup_norm_ = s;
}

double PiecewiseFn::operator()(double x) const {
    for (const auto& pc : pieces_) {
        if (x < pc.from) break;
        if (x <= pc.to) return pc.p(x);
    }
    return 0.0;
}

double PiecewiseFn::support_lo() const { return pieces_.empty() ? 0.0 : pieces_.front().from; }
double PiecewiseFn::support_hi() const { return pieces_.empty() ? 0.0 : pieces_.back().to; }

PiecewiseFn hat_fn(double a, double peak, double b) {
    // (x-a)/(peak-a) rising, (b-x)/(b-peak) falling
    Poly up = Poly::linear(-a / (peak - a), 1.0 / (peak - a));
    Poly down = Poly::linear(b / (b - peak), -1.0 / (b - peak));
    return PiecewiseFn({{a, peak, up}, {peak, b, down}});
}

PiecewiseFn ramp_fn(double from, double to) {
    if (from < to) {
        Poly down = Poly::linear(to / (to - from), -1.0 / (to - from));
        return PiecewiseFn({{from, to, down}});
    }
    Poly up = Poly::linear(-to / (from - to), 1.0 / (from - to));
    return PiecewiseFn({{to, from, up}});
}

TestFamily interior_family(const Interval& J, int K) {
    TestFamily fam;
    fam.kind = TestFamily::Kind::interior;
    const bool lo_fin = std::isfinite(J.left);
    const bool hi_fin = std::isfinite(J.right);
    const double anchor = lo_fin ? J.left : (hi_fin ? J.right : 0.0);

    for (int level = 0; static_cast<int>(fam.fns.size()) < K && level < 24; ++level) {
        double wlo, whi;
        long cells;
        if (lo_fin && hi_fin) {
            wlo = J.left;
            whi = J.right;
            cells = 1L << (level + 1);
        } else {
            double radius = std::ldexp(1.0, level + 1);
            wlo = lo_fin ? J.left : (hi_fin ? J.right - radius : -radius / 2);
            whi = hi_fin ? J.right : (lo_fin ? J.left + radius : radius / 2);
            cells = std::min(1L << (2 * level + 2), 1L << 16);
        }
        double step = (whi - wlo) / static_cast<double>(cells);
        std::vector<PiecewiseFn> level_fns;
        level_fns.reserve(static_cast<std::size_t>(cells - 1));
        for (long j = 0; j + 2 <= cells; ++j) {
            double a = wlo + step * static_cast<double>(j);
            level_fns.push_back(hat_fn(a, a + step, a + 2 * step));
        }
        if (!(lo_fin && hi_fin)) {
            // take hats nearest the finite endpoint (or the origin) first
            std::stable_sort(level_fns.begin(), level_fns.end(),
                             [&](const PiecewiseFn& f1, const PiecewiseFn& f2) {
                                 double p1 = 0.5 * (f1.support_lo() + f1.support_hi());
                                 double p2 = 0.5 * (f2.support_lo() + f2.support_hi());
                                 return std::abs(p1 - anchor) < std::abs(p2 - anchor);
                             });
        }
        for (auto& f : level_fns) {
            if (static_cast<int>(fam.fns.size()) >= K) break;
            fam.fns.push_back(std::move(f));
        }
    }
    return fam;
}

namespace {
TestFamily boundary_family(const Interval& J, int K, Side side) {
    TestFamily fam;
    fam.kind = side == Side::left ? TestFamily::Kind::left_boundary : TestFamily::Kind::right_boundary;
    double span = (J.bounded()) ? (J.right - J.left) : 4.0;
    double s = span / 2.0;
    for (int j = 0; j < K; ++j) {
        double extent = s * std::ldexp(1.0, -j);
        if (side == Side::left)
            fam.fns.push_back(ramp_fn(J.left, J.left + extent));
        else
            fam.fns.push_back(ramp_fn(J.right, J.right - extent));
    }
    return fam;
}
}  // namespace

TestFamily left_boundary_family(const Interval& J, int K) { return boundary_family(J, K, Side::left); }
TestFamily right_boundary_family(const Interval& J, int K) { return boundary_family(J, K, Side::right); }

// ---------------------------------------------------------------------------
// integration

namespace {

// Integral of density * f over [lo, hi] (a sub-range of one density piece).
double density_fn_integral(const Poly& density, const PiecewiseFn& f, double lo, double hi) {
    double total = 0.0;
    for (const auto& seg : f.pieces()) {
        double a = std::max(lo, seg.from);
        double b = std::min(hi, seg.to);
        if (a >= b) continue;
        double v = poly_integral(density * seg.p, a, b);
        if (std::isinf(v)) return v;
        total += v;
    }
    return total;
}

// weight * f(at) with the absorbing convention inf * 0 = 0.
double atom_contribution(double weight, double fval) {
    if (std::isinf(weight)) return fval > 0.0 ? kInf : 0.0;
    return weight * fval;
}

}  // namespace

double integrate(const SpeedMeasure& m, const PiecewiseFn& f, const Region& region) {
    if (region.lo < m.interval.left || region.hi > m.interval.right)
        throw std::invalid_argument("integrate: region not contained in the state interval");
    double total = 0.0;
    for (const auto& pc : m.pieces) {
        double a = std::max(region.lo, pc.from);
        double b = std::min(region.hi, pc.to);
        if (a >= b) continue;
        double v = density_fn_integral(pc.density, f, a, b);
        if (std::isinf(v)) return v;
        total += v;
    }
    for (const auto& atom : m.atoms) {
        if (!region.contains(atom.at)) continue;
        double v = atom_contribution(atom.weight, f(atom.at));
        if (std::isinf(v)) return v;
        total += v;
    }
    if (m.interval.left_closed && m.left_boundary_weight && region.contains(m.interval.left)) {
        double v = atom_contribution(*m.left_boundary_weight, f(m.interval.left));
        if (std::isinf(v)) return v;
        total += v;
    }
    if (m.interval.right_closed && m.right_boundary_weight && region.contains(m.interval.right)) {
        double v = atom_contribution(*m.right_boundary_weight, f(m.interval.right));
        if (std::isinf(v)) return v;
        total += v;
    }
    return total;
}

double mass(const SpeedMeasure& m, const Region& region) {
    if (region.lo < m.interval.left || region.hi > m.interval.right)
        throw std::invalid_argument("mass: region not contained in the state interval");
    double total = 0.0;
    for (const auto& pc : m.pieces) {
        double a = std::max(region.lo, pc.from);
        double b = std::min(region.hi, pc.to);
        if (a >= b) continue;
        double v = poly_integral(pc.density, a, b);
        if (std::isinf(v)) return v;
        total += v;
    }
    for (const auto& atom : m.atoms) {
        if (!region.contains(atom.at)) continue;
        if (std::isinf(atom.weight)) return kInf;
        total += atom.weight;
    }
    if (m.interval.left_closed && m.left_boundary_weight && region.contains(m.interval.left)) {
        if (std::isinf(*m.left_boundary_weight)) return kInf;
        total += *m.left_boundary_weight;
    }
    if (m.interval.right_closed && m.right_boundary_weight && region.contains(m.interval.right)) {
        if (std::isinf(*m.right_boundary_weight)) return kInf;
        total += *m.right_boundary_weight;
    }
    return total;
}

double vague_distance(const SpeedMeasure& m1, const SpeedMeasure& m2, const TestFamily& family) {
    const Interval &j1 = m1.interval, &j2 = m2.interval;
    if (j1.left != j2.left || j1.right != j2.right || j1.left_closed != j2.left_closed ||
        j1.right_closed != j2.right_closed)
        throw std::invalid_argument("vague_distance: mismatched intervals");
    double worst = 0.0;
    for (const auto& f : family.fns) {
        Region r{std::max(f.support_lo(), j1.left), std::min(f.support_hi(), j1.right), true, true};
        double d = std::abs(integrate(m1, f, r) - integrate(m2, f, r)) / (1.0 + f.sup_norm());
        worst = std::max(worst, d);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_piece_nonneg(const DensityPiece& pc, std::vector<Violation>& out) {
    // sample window: clip unbounded ends to an 8-unit audit window
    double lo = pc.from, hi = pc.to;
    if (std::isinf(lo) && std::isinf(hi)) {
        lo = -8.0;
        hi = 8.0;
    } else if (std::isinf(lo)) {
        lo = hi - 8.0;
    } else if (std::isinf(hi)) {
        hi = lo + 8.0;
    }
    constexpr int kAudit = 1024;
    double scale = 0.0;
    double worst = 0.0;
    double worst_x = lo;
    for (int k = 0; k <= kAudit; ++k) {
        double x = lo + (hi - lo) * k / kAudit;
        if (pc.density.min_deg < 0 && x == 0.0) continue;
        double v = pc.density(x);
        scale = std::max(scale, std::abs(v));
        if (v < worst) {
            worst = v;
            worst_x = x;
        }
    }
    if (worst < -1e-9 * (1.0 + scale))
        out.push_back({"density nonnegative", worst_x, "density sample below zero"});
    // tail sign as x -> +/-inf
    if (std::isinf(pc.to) && pc.density.leading_coeff() < 0.0)
        out.push_back({"density nonnegative", pc.to, "leading coefficient negative toward +inf"});
    if (std::isinf(pc.from)) {
        int e = pc.density.leading_degree();
        double c = pc.density.leading_coeff();
        double sign = (e % 2 == 0) ? c : -c;
        if (sign < 0.0) out.push_back({"density nonnegative", pc.from, "tail negative toward -inf"});
    }
}

// Symbolic test of int (x - e) * density near a finite open endpoint e.
// Divergence is only possible when the density is singular there, which our
// representation admits only at e == 0.
bool accessibility_integral_diverges(const SpeedMeasure& m, Side side) {
    double e = side == Side::left ? m.interval.left : m.interval.right;
    for (const auto& pc : m.pieces) {
        bool touches = side == Side::left ? pc.from <= e : pc.to >= e;
        if (!touches) continue;
        if (e == 0.0 && pc.density.trailing_degree() <= -2) return true;
    }
    return false;
}

}  // namespace

std::vector<Violation> validate(const SpeedMeasure& m) {
    std::vector<Violation> out;
    const Interval& J = m.interval;

    if (!(J.left < J.right)) out.push_back({"interval ordered", J.left, "left < right required"});
    if (std::isinf(J.left) && J.left_closed)
        out.push_back({"infinite endpoint open", J.left, "-inf cannot be closed"});
    if (std::isinf(J.right) && J.right_closed)
        out.push_back({"infinite endpoint open", J.right, "+inf cannot be closed"});

    // pieces: inside the closure of the interior, ordered, non-overlapping
    for (const auto& pc : m.pieces) {
        if (!(pc.from < pc.to)) out.push_back({"piece ordered", pc.from, "from < to required"});
        if (pc.from < J.left || pc.to > J.right)
            out.push_back({"piece inside interval", pc.from, "piece leaves the state interval"});
        if (pc.density.trailing_degree() < 0 && pc.from < 0.0 && pc.to > 0.0)
            out.push_back({"piece singularity interior", 0.0, "negative exponents straddle x = 0"});
        check_piece_nonneg(pc, out);
        if (pc.density.is_zero())
            out.push_back({"positive on open sets", pc.from, "identically zero density piece"});
    }

    // coverage of the interior (positivity on every open subinterval)
    std::vector<DensityPiece> sorted = m.pieces;
    std::sort(sorted.begin(), sorted.end(),
              [](const DensityPiece& a, const DensityPiece& b) { return a.from < b.from; });
    double cursor = J.left;
    for (const auto& pc : sorted) {
        double gap_tol = 1e-9 * (1.0 + std::min(std::abs(pc.from), 1e9));
        if (pc.from > cursor + gap_tol && cursor < J.right)
            out.push_back({"positive on open sets", cursor, "uncovered gap in the interior"});
        if (pc.from < cursor - gap_tol)
            out.push_back({"pieces non-overlapping", pc.from, "piece overlaps its predecessor"});
        cursor = std::max(cursor, pc.to);
    }
    if (cursor < J.right && !(std::isinf(J.right) && std::isinf(cursor)))
        out.push_back({"positive on open sets", cursor, "interior not covered up to the right endpoint"});

    // local finiteness: no interior singularity, no divergent mass at a
    // closed endpoint (absorption is encoded by an infinite weight instead)
    for (const auto& pc : m.pieces) {
        if (pc.density.trailing_degree() > -1) continue;
        bool touches_zero = (pc.from == 0.0 || pc.to == 0.0);
        if (!touches_zero) continue;
        if (J.interior_contains(0.0))
            out.push_back({"locally finite", 0.0, "infinite mass at an interior point"});
        else if ((J.left == 0.0 && J.left_closed) || (J.right == 0.0 && J.right_closed))
            out.push_back({"locally finite", 0.0, "infinite density mass at a closed endpoint"});
    }

    // atoms: strictly interior, positive, sorted, distinct
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
        const Atom& a = m.atoms[i];
        if (!J.interior_contains(a.at))
            out.push_back({"atoms interior", a.at, "atom not strictly inside the interval"});
        if (!(a.weight > 0.0)) out.push_back({"atom weight positive", a.at, "nonpositive atom weight"});
        if (std::isinf(a.weight))
            out.push_back({"atom weight finite", a.at, "interior atoms must have finite weight"});
        if (i > 0) {
            if (m.atoms[i - 1].at == a.at)
                out.push_back({"atoms distinct", a.at, "duplicate atom location"});
            else if (m.atoms[i - 1].at > a.at)
                out.push_back({"atoms sorted", a.at, "atom locations out of order"});
        }
    }

    // boundary weights: only at closed endpoints, nonnegative
    if (m.left_boundary_weight) {
        if (!J.left_closed)
            out.push_back({"boundary weight at closed endpoint", J.left, "left endpoint is open"});
        if (*m.left_boundary_weight < 0.0)
            out.push_back({"boundary weight nonnegative", J.left, "negative left boundary weight"});
    }
    if (m.right_boundary_weight) {
        if (!J.right_closed)
            out.push_back({"boundary weight at closed endpoint", J.right, "right endpoint is open"});
        if (*m.right_boundary_weight < 0.0)
            out.push_back({"boundary weight nonnegative", J.right, "negative right boundary weight"});
    }

    // open finite endpoints must be inaccessible: int (r - x) m(dx) = inf
    if (std::isfinite(J.right) && !J.right_closed && !accessibility_integral_diverges(m, Side::right))
        out.push_back({"finite open endpoint accessible", J.right,
                       "int (r - x) m(dx) converges; the process would reach the open endpoint"});
    if (std::isfinite(J.left) && !J.left_closed && !accessibility_integral_diverges(m, Side::left))
        out.push_back({"finite open endpoint accessible", J.left,
                       "int (x - l) m(dx) converges; the process would reach the open endpoint"});

    return out;
}

}  // namespace speedsim
