#include "resummap/jet.hpp"

#include <algorithm>
#include <cmath>

namespace resummap {

void Jet::check_compatible(const Jet& a, const Jet& b) {
    if (a.x0_ != b.x0_) throw ConfigError("jet: mixed expansion centers");
}

double Jet::derivative(int n) const {
    if (n < 0 || n > order())
        throw InsufficientOrderError("jet: derivative order exceeds the retained order budget");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= static_cast<double>(i);
    return fact * c_[static_cast<std::size_t>(n)];
}

Jet Jet::derivative_jet() const {
    if (order() < 1)
        throw InsufficientOrderError("jet: derivative exhausts the retained order budget");
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        d[i] = static_cast<double>(i + 1) * c_[i + 1];
    return Jet(std::move(d), x0_);
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet::check_compatible(a, b);
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] + b.c_[i];
    return Jet(std::move(c), a.x0_);
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet::check_compatible(a, b);
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] - b.c_[i];
    return Jet(std::move(c), a.x0_);
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet::check_compatible(a, b);
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Jet(std::move(c), a.x0_);
}

Jet operator/(const Jet& a, const Jet& b) {
    Jet::check_compatible(a, b);
    if (b.c_[0] == 0.0) throw ConfigError("jet: division by a jet with zero value");
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = k < a.c_.size() ? a.c_[k] : 0.0;
        for (std::size_t i = 0; i < k; ++i) acc -= c[i] * b.c_[k - i];
        c[k] = acc / b.c_[0];
    }
    return Jet(std::move(c), a.x0_);
}

Jet log(const Jet& a) {
    if (a.c_[0] <= 0.0) throw ConfigError("jet: log of a jet with non-positive value");
    std::size_t n = a.c_.size();
    std::vector<double> l(n);
    l[0] = std::log(a.c_[0]);
    // l' = a'/a, integrated coefficientwise
    for (std::size_t k = 1; k < n; ++k) {
        double acc = static_cast<double>(k) * a.c_[k];
        for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a.c_[k - j];
        l[k] = acc / (static_cast<double>(k) * a.c_[0]);
    }
    return Jet(std::move(l), a.x0_);
}

Jet pow(const Jet& a, double p) {
    if (a.c_[0] <= 0.0) throw ConfigError("jet: pow of a jet with non-positive value");
    std::size_t n = a.c_.size();
    std::vector<double> b(n);
    b[0] = std::pow(a.c_[0], p);
    // from b' a = p b a'
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += ((p + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * a.c_[j] *
                   b[k - j];
        b[k] = acc / (static_cast<double>(k) * a.c_[0]);
    }
    return Jet(std::move(b), a.x0_);
}

Jet operator*(double s, const Jet& a) {
    std::vector<double> c(a.c_);
    for (double& v : c) v *= s;
    return Jet(std::move(c), a.x0_);
}

Jet operator+(const Jet& a, double s) {
    std::vector<double> c(a.c_);
    c[0] += s;
    return Jet(std::move(c), a.x0_);
}

Jet operator-(const Jet& a, double s) { return a + (-s); }

} // namespace resummap
