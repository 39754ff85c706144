#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "resummap/errors.hpp"

namespace resummap {

// Exact rational arithmetic on 64-bit integers with overflow detection.
// Coefficient regressions must be exact, so any overflow throws instead of
// wrapping silently.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const { return num_ == 0; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long bd = b.den_ / g;
        return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g)),
                        checked_mul(a.den_, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(std::abs(a.num_), b.den_);
        long long g2 = std::gcd(std::abs(b.num_), a.den_);
        return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                        checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // Parses "p/q" or "p".
    static Rational parse(const std::string& s);

private:
    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw Error("rational overflow (add)");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error("rational overflow (mul)");
        return r;
    }

    long long num_;
    long long den_; // > 0
};

// Element of the field Q(sqrt2, sqrt3): c1 + c2*sqrt2 + c3*sqrt3 + c6*sqrt6.
// Closed under multiplication; used for the exact radical constants of the
// 4-periodic initial-condition matching.
struct QuadValue {
    Rational c1, c2, c3, c6;

    double value() const;
    std::string str() const;

    friend QuadValue operator+(const QuadValue& a, const QuadValue& b) {
        return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3, a.c6 + b.c6};
    }
    friend QuadValue operator-(const QuadValue& a, const QuadValue& b) {
        return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3, a.c6 - b.c6};
    }
    friend QuadValue operator*(const QuadValue& a, const QuadValue& b) {
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2
        QuadValue r;
        r.c1 = a.c1 * b.c1 + Rational(2) * a.c2 * b.c2 + Rational(3) * a.c3 * b.c3 +
               Rational(6) * a.c6 * b.c6;
        r.c2 = a.c1 * b.c2 + a.c2 * b.c1 + Rational(3) * (a.c3 * b.c6 + a.c6 * b.c3);
        r.c3 = a.c1 * b.c3 + a.c3 * b.c1 + Rational(2) * (a.c2 * b.c6 + a.c6 * b.c2);
        r.c6 = a.c1 * b.c6 + a.c6 * b.c1 + a.c2 * b.c3 + a.c3 * b.c2;
        return r;
    }
    friend QuadValue operator*(const Rational& s, const QuadValue& a) {
        return {s * a.c1, s * a.c2, s * a.c3, s * a.c6};
    }
    QuadValue operator-() const { return {-c1, -c2, -c3, -c6}; }
    friend bool operator==(const QuadValue& a, const QuadValue& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3 && a.c6 == b.c6;
    }
};

} // namespace resummap
