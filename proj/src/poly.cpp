#include "speedsim/poly.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace speedsim {

namespace {
constexpr double kInfLocal = std::numeric_limits<double>::infinity();
}

double powi(double x, int e) {
    if (e == 0) return 1.0;
    if (e < 0) return 1.0 / powi(x, -e);
    double base = x, r = 1.0;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool Poly::is_zero() const {
    for (double v : coeffs)
        if (v != 0.0) return false;
    return true;
}

double Poly::coeff(int degree) const {
    int j = degree - min_deg;
    if (j < 0 || j >= static_cast<int>(coeffs.size())) return 0.0;
    return coeffs[static_cast<std::size_t>(j)];
}

double Poly::operator()(double x) const {
    if (coeffs.empty()) return 0.0;
    // p(x) = x^min_deg * (c_0 + c_1 x + ...), Horner on the bracket
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
    return min_deg == 0 ? acc : acc * powi(x, min_deg);
}

Poly Poly::operator+(const Poly& other) const {
    if (coeffs.empty()) return other;
    if (other.coeffs.empty()) return *this;
    int lo = std::min(min_deg, other.min_deg);
    int hi = std::max(max_deg(), other.max_deg());
    Poly r(lo, std::vector<double>(static_cast<std::size_t>(hi - lo + 1), 0.0));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        r.coeffs[static_cast<std::size_t>(min_deg + static_cast<int>(j) - lo)] += coeffs[j];
    for (std::size_t j = 0; j < other.coeffs.size(); ++j)
        r.coeffs[static_cast<std::size_t>(other.min_deg + static_cast<int>(j) - lo)] += other.coeffs[j];
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    if (coeffs.empty() || other.coeffs.empty()) return Poly();
    Poly r(min_deg + other.min_deg,
           std::vector<double>(coeffs.size() + other.coeffs.size() - 1, 0.0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * other.coeffs[j];
    return r;
}

Poly Poly::scaled(double factor) const {
    Poly r = *this;
    for (double& v : r.coeffs) v *= factor;
    return r;
}

int Poly::leading_degree() const {
    for (std::size_t j = coeffs.size(); j-- > 0;)
        if (coeffs[j] != 0.0) return min_deg + static_cast<int>(j);
    return 0;
}

double Poly::leading_coeff() const {
    for (std::size_t j = coeffs.size(); j-- > 0;)
        if (coeffs[j] != 0.0) return coeffs[j];
    return 0.0;
}

int Poly::trailing_degree() const {
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0.0) return min_deg + static_cast<int>(j);
    return 0;
}

double Poly::trailing_coeff() const {
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0.0) return coeffs[j];
    return 0.0;
}

namespace {

// Sign of c*x^e on the half line (side +1: x > 0, side -1: x < 0).
double term_sign(double c, int e, int side) {
    if (c == 0.0) return 0.0;
    double s = c > 0 ? 1.0 : -1.0;
    if (side < 0 && (e % 2 != 0)) s = -s;
    return s;
}

// Antiderivative of c*x^e at x.  By the time this is called, divergent
// combinations have been filtered out: at x = +/-inf only e <= -2 terms
// remain, at x = 0 only e >= 0 terms remain, and e = -1 only appears with
// finite nonzero x.
double antideriv_at(double c, int e, double x) {
    if (std::isinf(x)) return 0.0;
    if (x == 0.0) return 0.0;
    if (e == -1) return c * std::log(std::abs(x));
    return c * powi(x, e + 1) / (e + 1);
}

}  // namespace

bool integral_diverges_at(const Poly& p, double endpoint) {
    if (p.coeffs.empty() || p.is_zero()) return false;
    if (endpoint == 0.0) return p.trailing_degree() <= -1;
    if (std::isinf(endpoint)) return p.leading_degree() >= -1;
    return false;
}

double poly_integral(const Poly& p, double lo, double hi) {
    if (p.coeffs.empty() || p.is_zero() || lo == hi) return 0.0;
    assert(lo < hi);
    // negative exponents may not straddle zero
    assert(!(p.trailing_degree() < 0 && lo < 0.0 && hi > 0.0));

    if (std::isinf(hi) && p.leading_degree() >= -1)
        return term_sign(p.leading_coeff(), p.leading_degree(), +1) * kInfLocal;
    if (std::isinf(lo) && p.leading_degree() >= -1)
        return term_sign(p.leading_coeff(), p.leading_degree(), -1) * kInfLocal;
    if (lo == 0.0 && p.trailing_degree() <= -1)
        return term_sign(p.trailing_coeff(), p.trailing_degree(), +1) * kInfLocal;
    if (hi == 0.0 && p.trailing_degree() <= -1)
        return term_sign(p.trailing_coeff(), p.trailing_degree(), -1) * kInfLocal;

    double total = 0.0;
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
        double c = p.coeffs[j];
        if (c == 0.0) continue;
        int e = p.min_deg + static_cast<int>(j);
        total += antideriv_at(c, e, hi) - antideriv_at(c, e, lo);
    }
    return total;
}

}  // namespace speedsim
