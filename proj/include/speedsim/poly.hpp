// poly.hpp - sparse Laurent-style polynomials with exact integration,
// including improper integrals against the endpoints 0 and +/-infinity.
#pragma once

#include <vector>

namespace speedsim {

// Polynomial sum_j c[j] * x^(min_deg + j).  min_deg may be negative, which is
// how power-law tail densities (e.g. x^-3) are represented; pieces with
// negative exponents must not straddle x = 0.
struct Poly {
    int min_deg = 0;
    std::vector<double> coeffs;

    Poly() = default;
    Poly(int min_degree, std::vector<double> c) : min_deg(min_degree), coeffs(std::move(c)) {}

    static Poly constant(double v) { return Poly(0, {v}); }
    // c0 + c1 * x
    static Poly linear(double c0, double c1) { return Poly(0, {c0, c1}); }

    bool is_zero() const;
    int max_deg() const { return min_deg + static_cast<int>(coeffs.size()) - 1; }
    double coeff(int degree) const;

    double operator()(double x) const;

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(double factor) const;

    // Degree of the dominant term as x -> +/-inf (largest exponent with a
    // nonzero coefficient), or 0 for the zero polynomial.
    int leading_degree() const;
    double leading_coeff() const;
    // Dominant term as x -> 0 (smallest exponent with nonzero coefficient).
    int trailing_degree() const;
    double trailing_coeff() const;
};

// x^e at the endpoint limits used by the integrators below.
double powi(double x, int e);

// Exact integral of p over [lo, hi].  lo/hi may be 0 or +/-infinity; the
// interval must not have 0 in its interior when min_deg < 0.  Divergent
// integrals return +/-infinity according to the dominant term.
double poly_integral(const Poly& p, double lo, double hi);

// True iff the improper integral of p toward the given endpoint diverges.
// `endpoint` is 0 (singular end) or +/-infinity (tail end); the other bound
// is irrelevant for divergence.
bool integral_diverges_at(const Poly& p, double endpoint);

}  // namespace speedsim
