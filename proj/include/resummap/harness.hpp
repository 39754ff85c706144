#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resummap/errors.hpp"

namespace resummap {

// Fixed point of K = sqrt(log K - 3/2 log eps), solved by damped iteration.
double solve_K(double eps);

enum class Grouping {
    Paren,   // n = floor((K + c/K) / sqrt(eps))
    Literal, // n = floor(K + (c/K) / sqrt(eps))
};

// Representative indices before, inside, and after the first transition of the
// slowly-varying map.
struct LandmarkSet {
    double K;
    long n1, n2, n3;
};
LandmarkSet landmarks(double eps, Grouping grouping = Grouping::Paren);

enum class SweepMode { Static2, Static4, Dynamic };

struct ErrorReport {
    SweepMode mode;
    double eps;
    long n_max;
    double max_abs_error;
    long argmax_n;
    std::array<double, 3> landmark_errors{}; // Dynamic mode
    std::array<double, 4> branch_tail_errors{}; // Static4 mode, indexed by n mod 4
};

ErrorReport evaluate_error(SweepMode mode, double eps, long n_max = 0);
std::vector<ErrorReport> error_sweep(SweepMode mode, std::span<const double> eps_grid,
                                     long n_max = 0);

// Reference error curve (columns eps,error) for comparison overlays.
struct RefSeries {
    std::vector<double> eps;
    std::vector<double> error;
};
RefSeries import_reference_errors(const std::filesystem::path& path);

// Nearest-neighbour alignment of a reference curve onto a sweep grid; sets
// *warned when any grid point had no exact match.
std::vector<double> align_reference(const RefSeries& ref, std::span<const double> grid,
                                    bool* warned);

// Writes `<out_prefix>*.csv` plus a gnuplot script `<out_prefix>.gp` with the
// data series of the named figure. Deterministic for fixed inputs.
void emit_figure_data(const std::string& figure_id, const std::filesystem::path& out_prefix,
                      const RefSeries* ref = nullptr);

const std::vector<std::string>& known_figures();

// Parses "lo:hi:steps" into an inclusive linspace with `steps` points.
std::vector<double> parse_grid(const std::string& spec);

} // namespace resummap
