#pragma once

#include <complex>
#include <span>
#include <vector>

#include "resummap/errors.hpp"

namespace resummap {

// Branch-continuous exponential weight slope f(eps) sampled on a grid, with the
// located pole (sector appearance) and Re-sign change (sector dominance).
struct WeightProfile {
    std::vector<double> eps_grid;
    std::vector<std::complex<double>> f_values;
    std::vector<double> poles;
    std::vector<double> sign_changes;
};

// Weight slope of the 4-periodic sector of the static map.
WeightProfile profile_f4(std::span<const double> eps_grid);

// Weight slope of the 8-periodic sector, computed from the 4-cycle multiplier
// M4 through exp(-4 f8) = M4, branch fixed so Im f8 = -7 pi/4 past the pole.
WeightProfile profile_f8(std::span<const double> eps_grid);
std::complex<double> f8(double eps);

enum class Region {
    R1 = 1, // sector absent
    R2 = 2, // sector present but exponentially small
    R3 = 3, // sector dominant
};

struct RegionLabel {
    Region label;
    double appearance; // pole position
    double dominance;  // Re-sign-change position
};

RegionLabel classify_region(const WeightProfile& profile, double eps);

// Smallest p such that p * slope is a multiple of 2 pi: -pi -> 2, -3pi/2 -> 4,
// -7pi/4 -> 8. Throws when the slope is not within 1e-6 of a multiple of pi/4.
int periodicity_of(double f_im_slope);

} // namespace resummap
