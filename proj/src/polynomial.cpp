#include "resummap/polynomial.hpp"

namespace resummap {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs.size()) c[i] += a.coeffs[i];
        if (i < b.coeffs.size()) c[i] += b.coeffs[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs[i];
    return Poly(std::move(c));
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
    return a.num * b.den == b.num * a.den;
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b, std::size_t n_terms) {
    RatSeries c(n_terms);
    for (std::size_t i = 0; i < a.size() && i < n_terms; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n_terms; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

RatSeries series_pow(const RatSeries& a, int p, std::size_t n_terms) {
    RatSeries r(n_terms);
    r[0] = Rational(1);
    for (int i = 0; i < p; ++i) r = series_mul(r, a, n_terms);
    return r;
}

RatSeries series_inv(const RatSeries& den, std::size_t n_terms) {
    if (den.empty() || den[0].is_zero()) throw Error("series_inv: zero constant term");
    RatSeries r(n_terms);
    r[0] = Rational(1) / den[0];
    for (std::size_t k = 1; k < n_terms; ++k) {
        Rational acc;
        for (std::size_t i = 0; i < k; ++i) {
            Rational d = k - i < den.size() ? den[k - i] : Rational(0);
            acc += r[i] * d;
        }
        r[k] = -acc / den[0];
    }
    return r;
}

RatSeries series_log1p(std::size_t n_terms) {
    RatSeries r(n_terms);
    for (std::size_t k = 1; k < n_terms; ++k)
        r[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long long>(k));
    return r;
}

RatSeries series_binomial(const Rational& exponent, std::size_t n_terms) {
    RatSeries r(n_terms);
    r[0] = Rational(1);
    for (std::size_t k = 1; k < n_terms; ++k)
        r[k] = r[k - 1] * (exponent - Rational(static_cast<long long>(k) - 1)) /
               Rational(static_cast<long long>(k));
    return r;
}

} // namespace resummap
