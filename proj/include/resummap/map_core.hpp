#pragma once

#include <span>
#include <vector>

#include "resummap/errors.hpp"

namespace resummap {

// Map with fixed parameter lambda = 3 + eps: y(n+1) = (3+eps) y(n) (1 - y(n)).
struct StaticMapConfig {
    double eps = 0.0;
    double y0 = 2.0 / 3.0;

    double lambda() const { return 3.0 + eps; }
    void validate() const;
};

// Map with slowly increasing parameter lambda = lambda0 + eps*n.
struct DynamicMapConfig {
    double lambda0 = 3.0;
    double eps = 0.0;
    double y0 = 2.0 / 3.0;

    void validate() const;
};

struct Orbit {
    long start_index = 0;
    std::vector<double> values;

    double operator[](long n) const { return values.at(static_cast<std::size_t>(n - start_index)); }
};

// Period-p orbit. `points` are listed in orbit order, rotated so the smallest
// value comes first; `multiplier` is the derivative of the p-fold composed map
// along the cycle.
struct Cycle {
    int period = 1;
    std::vector<double> points;
    double multiplier = 0.0;
};

Orbit iterate_static(const StaticMapConfig& cfg, long n_steps);
Orbit iterate_dynamic(const DynamicMapConfig& cfg, long n_steps);

// Fixed point (2+eps)/(3+eps) of the static map.
double nonperiodic_fixed_point(double eps);

// Closed-form 2-cycle (4 + eps +- sqrt(eps(4+eps)))/(2(3+eps)), multiplier 1 - eps(4+eps).
Cycle two_cycle(double eps);

// Newton solve of the p-fold composed static map, p in {1,2,4,8}. The first
// seed entries are tried as starting points in turn.
Cycle find_cycle(double eps, int period, std::span<const double> seed);

// 4-cycle with automatic seeding: orbit tail in the attracting window,
// parameter continuation past it.
Cycle four_cycle(double eps);

// Product over cycle points of (3+eps)(1 - 2 y_i). The compensated flag turns
// on twofold (fma-based) product accumulation for use near |M| = 1.
double cycle_multiplier(std::span<const double> points, double eps, bool compensated = false);
double cycle_multiplier(const Cycle& cycle, double eps, bool compensated = false);

} // namespace resummap
