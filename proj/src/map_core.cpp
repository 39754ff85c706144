#include "resummap/map_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace resummap {

namespace {

double step(double y, double lambda) { return lambda * y * (1.0 - y); }
double step_deriv(double y, double lambda) { return lambda * (1.0 - 2.0 * y); }

// p-fold composition and its derivative via the chain rule.
void compose(double y, double lambda, int p, double& fy, double& dfy) {
    fy = y;
    dfy = 1.0;
    for (int i = 0; i < p; ++i) {
        dfy *= step_deriv(fy, lambda);
        fy = step(fy, lambda);
    }
}

constexpr double kCycleResidualTol = 1e-13;
constexpr double kDegenerateTol = 1e-8;

} // namespace

void StaticMapConfig::validate() const {
    if (!(y0 > 0.0 && y0 < 1.0))
        throw ConfigError("static map: y0 must lie in (0,1), got " + std::to_string(y0));
    double l = lambda();
    if (!(l > 0.0 && l <= 4.0))
        throw ConfigError("static map: lambda = 3 + eps must lie in (0,4], got " + std::to_string(l));
}

void DynamicMapConfig::validate() const {
    if (!(y0 > 0.0 && y0 < 1.0))
        throw ConfigError("dynamic map: y0 must lie in (0,1), got " + std::to_string(y0));
    if (!(eps > 0.0)) throw ConfigError("dynamic map: eps must be positive");
}

Orbit iterate_static(const StaticMapConfig& cfg, long n_steps) {
    cfg.validate();
    if (n_steps < 0) throw ConfigError("iterate_static: n_steps must be >= 0");
    Orbit orbit;
    orbit.values.reserve(static_cast<std::size_t>(n_steps) + 1);
    double y = cfg.y0;
    orbit.values.push_back(y);
    double l = cfg.lambda();
    for (long n = 0; n < n_steps; ++n) {
        y = step(y, l);
        orbit.values.push_back(y);
    }
    return orbit;
}

Orbit iterate_dynamic(const DynamicMapConfig& cfg, long n_steps) {
    cfg.validate();
    if (n_steps < 0) throw ConfigError("iterate_dynamic: n_steps must be >= 0");
    Orbit orbit;
    orbit.values.reserve(static_cast<std::size_t>(n_steps) + 1);
    double y = cfg.y0;
    orbit.values.push_back(y);
    for (long n = 0; n < n_steps; ++n) {
        double lambda = cfg.lambda0 + cfg.eps * static_cast<double>(n);
        if (lambda > 4.0)
            throw DomainEscapeError(
                "iterate_dynamic: lambda exceeded 4 at n = " + std::to_string(n), n);
        y = step(y, lambda);
        orbit.values.push_back(y);
    }
    return orbit;
}

double nonperiodic_fixed_point(double eps) {
    if (3.0 + eps == 0.0) throw ConfigError("nonperiodic_fixed_point: 3 + eps must be nonzero");
    return (2.0 + eps) / (3.0 + eps);
}

Cycle two_cycle(double eps) {
    double disc = eps * (4.0 + eps);
    if (disc < 0.0)
        throw ComplexCycleError("two_cycle: eps(4+eps) < 0 gives a complex 2-cycle");
    double root = std::sqrt(disc);
    double lo = (4.0 + eps - root) / (2.0 * (3.0 + eps));
    double hi = (4.0 + eps + root) / (2.0 * (3.0 + eps));
    Cycle c;
    c.period = 2;
    c.points = {lo, hi};
    c.multiplier = 1.0 - disc;
    return c;
}

double cycle_multiplier(std::span<const double> points, double eps, bool compensated) {
    double lambda = 3.0 + eps;
    if (!compensated) {
        double m = 1.0;
        for (double y : points) m *= step_deriv(y, lambda);
        return m;
    }
    // Twofold product: carry the relative residual of each fl() product.
    double m = 1.0;
    double corr = 0.0;
    for (double y : points) {
        double t = step_deriv(y, lambda);
        double p = m * t;
        double r = std::fma(m, t, -p);
        if (p != 0.0) corr += r / p;
        m = p;
    }
    return m * (1.0 + corr);
}

double cycle_multiplier(const Cycle& cycle, double eps, bool compensated) {
    return cycle_multiplier(cycle.points, eps, compensated);
}

Cycle find_cycle(double eps, int period, std::span<const double> seed) {
    if (period != 1 && period != 2 && period != 4 && period != 8)
        throw ConfigError("find_cycle: period must be one of 1, 2, 4, 8");
    if (seed.empty()) throw ConfigError("find_cycle: seed must be nonempty");
    double lambda = 3.0 + eps;

    double root = 0.0;
    bool converged = false;
    for (double start : seed) {
        double y = start;
        bool ok = false;
        for (int it = 0; it < 100; ++it) {
            double fy, dfy;
            compose(y, lambda, period, fy, dfy);
            double g = fy - y;
            if (std::abs(g) < kCycleResidualTol) {
                ok = true;
                break;
            }
            double dg = dfy - 1.0;
            if (dg == 0.0) break;
            double stp = g / dg;
            double y_next = y - stp;
            // Bisection-damped fallback keeps the iterate inside [0,1] near
            // degenerate bifurcation points where the full step overshoots.
            int halvings = 0;
            while ((y_next <= 0.0 || y_next >= 1.0) && halvings < 60) {
                stp *= 0.5;
                y_next = y - stp;
                ++halvings;
            }
            if (y_next <= 0.0 || y_next >= 1.0) break;
            y = y_next;
        }
        if (ok) {
            root = y;
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SolverError("find_cycle: Newton failed to converge for period " +
                          std::to_string(period) + " at eps = " + std::to_string(eps));

    Cycle c;
    c.period = period;
    c.points.resize(static_cast<std::size_t>(period));
    double y = root;
    for (int i = 0; i < period; ++i) {
        c.points[static_cast<std::size_t>(i)] = y;
        y = step(y, lambda);
    }

    // A solution whose points coincide pairwise is a cycle of smaller true
    // period that must be flagged, not silently returned.
    for (int d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        bool collapsed = true;
        for (int i = 0; i + d < period; ++i)
            if (std::abs(c.points[static_cast<std::size_t>(i)] -
                         c.points[static_cast<std::size_t>(i + d)]) > kDegenerateTol)
                collapsed = false;
        if (collapsed)
            throw DegenerateCycleError("find_cycle: period-" + std::to_string(period) +
                                       " solve collapsed onto a period-" + std::to_string(d) +
                                       " cycle at eps = " + std::to_string(eps));
    }
    // At a doubling point the composed map is cubically flat, so the residual
    // tolerance admits pseudo-cycles with larger separation than kDegenerateTol.
    // Near-unit multiplier together with tiny separation marks a solve that
    // cannot be distinguished from the collapsing parent cycle.
    if (period > 1) {
        double min_sep = 1e300;
        for (int i = 0; i < period; ++i)
            for (int j = i + 1; j < period; ++j)
                min_sep = std::min(min_sep, std::abs(c.points[static_cast<std::size_t>(i)] -
                                                     c.points[static_cast<std::size_t>(j)]));
        double mult = cycle_multiplier(c.points, eps);
        if (min_sep < 1e-3 && std::abs(mult - 1.0) < 1e-6)
            throw DegenerateCycleError("find_cycle: period-" + std::to_string(period) +
                                       " solution at eps = " + std::to_string(eps) +
                                       " is unresolved from its parent cycle");
    }

    // Deterministic branch labelling: rotate so the smallest point leads.
    auto min_it = std::min_element(c.points.begin(), c.points.end());
    std::rotate(c.points.begin(), min_it, c.points.end());
    c.multiplier = cycle_multiplier(c.points, eps);
    return c;
}

Cycle four_cycle(double eps) {
    constexpr double kEps0 = 0.449489742783178098; // sqrt(6) - 2
    if (eps <= kEps0 + 1e-6)
        throw RegimeError("four_cycle: no 4-cycle below eps = sqrt(6) - 2");

    // Attracting window: seed from the settled orbit tail.
    constexpr double kStableTop = 0.54;
    if (eps <= kStableTop) {
        StaticMapConfig cfg{eps, 0.66};
        Orbit orbit = iterate_static(cfg, 4000);
        std::vector<double> seed(orbit.values.end() - 4, orbit.values.end());
        return find_cycle(eps, 4, seed);
    }

    // Unstable range: continue the cycle in eps from the attracting window.
    Cycle c = four_cycle(kStableTop);
    double e = kStableTop;
    while (e < eps) {
        e = std::min(e + 0.005, eps);
        c = find_cycle(e, 4, c.points);
    }
    return c;
}

} // namespace resummap
