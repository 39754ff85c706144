#pragma once

#include <vector>

#include "resummap/rational.hpp"

namespace resummap {

// Dense polynomial with exact rational coefficients, coeffs[i] multiplying x^i.
struct Poly {
    std::vector<Rational> coeffs;

    Poly() = default;
    Poly(std::initializer_list<Rational> c) : coeffs(c) { trim(); }
    explicit Poly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->value();
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }
};

// Ratio of two polynomials. Kept unreduced; equality is decided by
// cross-multiplication, which is exact regardless of common factors.
struct RationalFunction {
    Poly num;
    Poly den; // nonzero

    double eval(double x) const { return num.eval(x) / den.eval(x); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a) {
        return {s * a.num, a.den};
    }
    RationalFunction operator-() const { return {Rational(-1) * num, den}; }
};

// a/b == c/d  <=>  a*d == c*b.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

// Truncated power series with rational coefficients (in some small variable),
// all operations exact through the retained order.
using RatSeries = std::vector<Rational>;

RatSeries series_mul(const RatSeries& a, const RatSeries& b, std::size_t n_terms);
RatSeries series_pow(const RatSeries& a, int p, std::size_t n_terms);
// Coefficients of 1/(den), den[0] != 0.
RatSeries series_inv(const RatSeries& den, std::size_t n_terms);
// Coefficients of log(1+u) (constant term zero).
RatSeries series_log1p(std::size_t n_terms);
// Coefficients of (1+u)^(p/q) via the recurrence b_k = b_{k-1} (p/q - k + 1)/k.
RatSeries series_binomial(const Rational& exponent, std::size_t n_terms);

} // namespace resummap
