#pragma once

#include <vector>

#include "resummap/errors.hpp"

namespace resummap {

// Truncated Taylor expansion about a fixed point: f(x0 + t) = sum c[i] t^i.
// Arithmetic is exact through the retained order, which is what the
// coefficient recurrences need to evaluate high derivatives without
// cancellation error.
class Jet {
public:
    Jet() = default;
    Jet(std::vector<double> coeffs, double x0) : c_(std::move(coeffs)), x0_(x0) {
        if (c_.empty()) throw ConfigError("jet: order must be >= 0");
    }

    static Jet constant(double v, double x0, int order) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        c[0] = v;
        return Jet(std::move(c), x0);
    }
    static Jet variable(double x0, int order) {
        Jet j = constant(x0, x0, order);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double center() const { return x0_; }
    double value() const { return c_[0]; }
    double coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }

    // n-th derivative at the center: n! * c[n].
    double derivative(int n) const;

    // One order lower; the coefficient view of d/dx.
    Jet derivative_jet() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(double s, const Jet& a);
    friend Jet operator+(const Jet& a, double s);
    friend Jet operator-(const Jet& a, double s);

    // composition with log and real powers, value > 0 required
    friend Jet log(const Jet& a);
    friend Jet pow(const Jet& a, double p);

private:
    static void check_compatible(const Jet& a, const Jet& b);

    std::vector<double> c_;
    double x0_ = 0.0;
};

} // namespace resummap
