#include "resummap/exp_weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "resummap/map_core.hpp"
#include "resummap/static_transseries.hpp"

namespace resummap {

namespace {

constexpr double kPi = std::numbers::pi;

double bisect(double lo, double hi, const auto& fn, double tol) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw SolverError("bisect: root not bracketed");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

// 4-cycle multiplier with parameter continuation across the grid sweep.
class FourCycleTracker {
public:
    double multiplier(double eps) {
        if (!have_last_ || std::abs(eps - last_eps_) > 0.02) {
            last_ = four_cycle(eps);
        } else {
            last_ = find_cycle(eps, 4, last_.points);
        }
        last_eps_ = eps;
        have_last_ = true;
        return last_.multiplier;
    }

private:
    Cycle last_;
    double last_eps_ = 0.0;
    bool have_last_ = false;
};

std::complex<double> f8_from_multiplier(double m4) {
    // exp(-4 f8) = M4; Im f8 = -3 pi/2 while M4 > 0, -7 pi/4 past the pole.
    if (m4 == 0.0) throw PoleError("f8: superstable 4-cycle (M4 = 0)");
    double re = -0.25 * std::log(std::abs(m4));
    double im = m4 > 0.0 ? -1.5 * kPi : -1.75 * kPi;
    return {re, im};
}

void locate_markers(WeightProfile& p, const auto& pole_fn, const auto& resign_fn) {
    // Bisection between adjacent grid points; reproducible independent of the
    // grid resolution used for the profile values themselves.
    for (std::size_t i = 0; i + 1 < p.eps_grid.size(); ++i) {
        double a = p.eps_grid[i];
        double b = p.eps_grid[i + 1];
        if (pole_fn(a) * pole_fn(b) < 0.0) p.poles.push_back(bisect(a, b, pole_fn, 1e-14));
        if (resign_fn(a) * resign_fn(b) < 0.0)
            p.sign_changes.push_back(bisect(a, b, resign_fn, 1e-14));
    }
}

} // namespace

WeightProfile profile_f4(std::span<const double> eps_grid) {
    WeightProfile p;
    p.eps_grid.assign(eps_grid.begin(), eps_grid.end());
    if (p.eps_grid.empty()) throw ConfigError("profile_f4: empty grid");
    if (!std::is_sorted(p.eps_grid.begin(), p.eps_grid.end()))
        throw ConfigError("profile_f4: grid must be strictly increasing");
    if (p.eps_grid.front() <= 0.0) throw ConfigError("profile_f4: grid must start above 0");
    p.f_values.reserve(p.eps_grid.size());
    for (double e : p.eps_grid) p.f_values.push_back(f4(e));

    auto pole_fn = [](double e) { return 1.0 - e * (4.0 + e); };
    // Past the pole Re f4 = -1/2 log(eps(4+eps) - 1); compare the argument to 1.
    auto resign_fn = [](double e) { return e * (4.0 + e) - 2.0; };
    locate_markers(p, pole_fn, resign_fn);
    return p;
}

std::complex<double> f8(double eps) { return f8_from_multiplier(four_cycle(eps).multiplier); }

WeightProfile profile_f8(std::span<const double> eps_grid) {
    WeightProfile p;
    p.eps_grid.assign(eps_grid.begin(), eps_grid.end());
    if (p.eps_grid.empty()) throw ConfigError("profile_f8: empty grid");
    if (!std::is_sorted(p.eps_grid.begin(), p.eps_grid.end()))
        throw ConfigError("profile_f8: grid must be strictly increasing");
    if (p.eps_grid.front() <= eps0_static())
        throw ConfigError("profile_f8: grid must lie above sqrt(6) - 2 where a 4-cycle exists");

    FourCycleTracker tracker;
    p.f_values.reserve(p.eps_grid.size());
    for (double e : p.eps_grid) p.f_values.push_back(f8_from_multiplier(tracker.multiplier(e)));

    FourCycleTracker marker_tracker;
    auto pole_fn = [&](double e) { return marker_tracker.multiplier(e); };
    auto resign_fn = [&](double e) { return std::log(std::abs(marker_tracker.multiplier(e))); };
    locate_markers(p, pole_fn, resign_fn);
    return p;
}

RegionLabel classify_region(const WeightProfile& profile, double eps) {
    if (profile.eps_grid.empty()) throw ConfigError("classify_region: empty profile");
    if (eps < profile.eps_grid.front() || eps > profile.eps_grid.back())
        throw HullError("classify_region: eps outside the profile grid hull");
    if (profile.poles.empty() || profile.sign_changes.empty())
        throw ConfigError("classify_region: profile does not bracket both boundaries");
    RegionLabel r{Region::R1, profile.poles.front(), profile.sign_changes.front()};
    if (eps >= r.dominance)
        r.label = Region::R3;
    else if (eps >= r.appearance)
        r.label = Region::R2;
    return r;
}

int periodicity_of(double f_im_slope) {
    double quarters = f_im_slope / (kPi / 4.0);
    double rounded = std::round(quarters);
    if (std::abs(f_im_slope - rounded * kPi / 4.0) > 1e-6)
        throw ConfigError("periodicity_of: slope " + std::to_string(f_im_slope) +
                          " is not a dyadic multiple of pi");
    long k = std::abs(static_cast<long>(rounded)); // slope = -k pi/4
    if (k == 0) return 1;
    for (int p = 1; p <= 8; ++p)
        if ((p * k) % 8 == 0) return p;
    throw ConfigError("periodicity_of: unclassified slope");
}

} // namespace resummap
