#include "resummap/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "resummap/csv_io.hpp"
#include "resummap/dynamic_transseries.hpp"
#include "resummap/exp_weights.hpp"
#include "resummap/map_core.hpp"
#include "resummap/static_transseries.hpp"

namespace resummap {

double solve_K(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("solve_K: eps must lie in (0,1)");
    double c = -1.5 * std::log(eps);
    double k = std::sqrt(c);
    for (int it = 0; it < 200; ++it) {
        double next = std::sqrt(std::log(k) + c);
        if (!std::isfinite(next)) break;
        // Half step; plain iteration already contracts, damping adds margin
        // near eps -> 1 where log K turns negative.
        next = 0.5 * (next + k);
        double residual = next - std::sqrt(std::log(next) + c);
        if (std::abs(residual) < 1e-13) return next;
        k = next;
    }
    throw SolverError("solve_K: fixed-point iteration did not converge");
}

LandmarkSet landmarks(double eps, Grouping grouping) {
    double k = solve_K(eps);
    double rse = 1.0 / std::sqrt(eps);
    LandmarkSet l;
    l.K = k;
    l.n1 = static_cast<long>(std::floor(rse));
    if (grouping == Grouping::Paren) {
        l.n2 = static_cast<long>(std::floor((k + 1.0 / k) * rse));
        l.n3 = static_cast<long>(std::floor((k + 15.0 / k) * rse));
    } else {
        l.n2 = static_cast<long>(std::floor(k + (1.0 / k) * rse));
        l.n3 = static_cast<long>(std::floor(k + (15.0 / k) * rse));
    }
    return l;
}

namespace {

long default_n_max(SweepMode mode, double eps) {
    switch (mode) {
        case SweepMode::Static2:
        case SweepMode::Static4:
            return 2000;
        case SweepMode::Dynamic:
            return std::lround(0.3 / eps);
    }
    return 2000;
}

} // namespace

ErrorReport evaluate_error(SweepMode mode, double eps, long n_max) {
    if (n_max <= 0) n_max = default_n_max(mode, eps);
    ErrorReport rep{};
    rep.mode = mode;
    rep.eps = eps;
    rep.n_max = n_max;

    if (mode == SweepMode::Static2) {
        if (!(eps > 0.0 && eps < eps0_static()))
            throw RegimeError("static-2 sweep requires 0 < eps < sqrt(6) - 2");
        Orbit orbit = iterate_static({eps, 2.0 / 3.0}, n_max);
        for (long n = 0; n <= n_max; ++n) {
            double err = std::abs(orbit[n] - r2_app(eps * static_cast<double>(n), eps));
            if (err > rep.max_abs_error) {
                rep.max_abs_error = err;
                rep.argmax_n = n;
            }
        }
        return rep;
    }

    if (mode == SweepMode::Static4) {
        if (!(eps > eps0_static()))
            throw RegimeError("static-4 sweep requires eps > sqrt(6) - 2");
        Orbit orbit = iterate_static({eps, 2.0 / 3.0}, n_max);
        for (long n = 0; n <= n_max; ++n) {
            double err = std::abs(orbit[n] - r4_app(eps * static_cast<double>(n), eps));
            if (err > rep.max_abs_error) {
                rep.max_abs_error = err;
                rep.argmax_n = n;
            }
            // Settled per-branch errors from the tail.
            if (n > n_max - 40) rep.branch_tail_errors[static_cast<std::size_t>(n % 4)] =
                std::max(rep.branch_tail_errors[static_cast<std::size_t>(n % 4)], err);
        }
        return rep;
    }

    if (!(eps > 0.0 && eps <= 0.01))
        throw RegimeError("dynamic sweep requires 0 < eps <= 0.01");
    LandmarkSet l = landmarks(eps);
    long n_range = std::max(n_max, l.n3);
    Orbit orbit = iterate_dynamic({3.0, eps, 2.0 / 3.0}, n_range);
    for (long n = 0; n <= n_max; ++n) {
        double err = std::abs(orbit[n] - r_app_dynamic(eps * static_cast<double>(n), eps));
        if (err > rep.max_abs_error) {
            rep.max_abs_error = err;
            rep.argmax_n = n;
        }
    }
    const long marks[3] = {l.n1, l.n2, l.n3};
    for (int i = 0; i < 3; ++i)
        rep.landmark_errors[static_cast<std::size_t>(i)] =
            std::abs(orbit[marks[i]] - r_app_dynamic(eps * static_cast<double>(marks[i]), eps));
    return rep;
}

std::vector<ErrorReport> error_sweep(SweepMode mode, std::span<const double> eps_grid,
                                     long n_max) {
    std::vector<std::future<ErrorReport>> futures;
    futures.reserve(eps_grid.size());
    for (double eps : eps_grid)
        futures.push_back(std::async(std::launch::async,
                                     [mode, eps, n_max] { return evaluate_error(mode, eps, n_max); }));
    std::vector<ErrorReport> out;
    out.reserve(eps_grid.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

RefSeries import_reference_errors(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open reference file: " + path.string());
    RefSeries ref;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.back() == '\r') {
            if (!line.empty()) line.pop_back();
            if (line.empty()) continue;
        }
        if (!saw_header) {
            if (line.find("eps") == std::string::npos || line.find("error") == std::string::npos)
                throw CsvParseError("reference file: expected header 'eps,error' on line 1",
                                    line_no);
            saw_header = true;
            continue;
        }
        std::istringstream row(line);
        std::string a, b, extra;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
            throw CsvParseError("reference file: expected two columns on line " +
                                    std::to_string(line_no),
                                line_no);
        if (std::getline(row, extra, ','))
            throw CsvParseError("reference file: too many columns on line " +
                                    std::to_string(line_no),
                                line_no);
        try {
            std::size_t pos_a = 0, pos_b = 0;
            double ea = std::stod(a, &pos_a);
            double eb = std::stod(b, &pos_b);
            if (pos_a != a.size() || pos_b != b.size()) throw std::invalid_argument("trailing");
            ref.eps.push_back(ea);
            ref.error.push_back(eb);
        } catch (const std::exception&) {
            throw CsvParseError("reference file: malformed number on line " +
                                    std::to_string(line_no),
                                line_no);
        }
    }
    if (!saw_header) throw CsvParseError("reference file: missing header", 0);
    return ref;
}

std::vector<double> align_reference(const RefSeries& ref, std::span<const double> grid,
                                    bool* warned) {
    std::vector<double> out;
    if (warned) *warned = false;
    if (ref.eps.empty()) {
        if (warned) *warned = true;
        return out;
    }
    out.reserve(grid.size());
    for (double g : grid) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < ref.eps.size(); ++i)
            if (std::abs(ref.eps[i] - g) < std::abs(ref.eps[best] - g)) best = i;
        if (std::abs(ref.eps[best] - g) > 1e-12 * std::max(1.0, std::abs(g)) && warned)
            *warned = true;
        out.push_back(ref.error[best]);
    }
    return out;
}

// --- figure emission ------------------------------------------------------------

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

void write_gp(const std::filesystem::path& path, const std::string& body) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path.string());
    out << "# gnuplot script\nset datafile separator ','\n" << body;
}

void approx_csv(const std::filesystem::path& path, double eps, long n_max, bool four_per,
                bool dynamic) {
    CsvWriter csv(path);
    csv.header({"n", "x", "exact", "approx", "error"});
    Orbit orbit = dynamic ? iterate_dynamic({3.0, eps, 2.0 / 3.0}, n_max)
                          : iterate_static({eps, 2.0 / 3.0}, n_max);
    for (long n = 0; n <= n_max; ++n) {
        double x = eps * static_cast<double>(n);
        double approx = dynamic ? r_app_dynamic(x, eps) : (four_per ? r4_app(x, eps) : r2_app(x, eps));
        csv.field(n).field(x).field(orbit[n]).field(approx).field(orbit[n] - approx);
        csv.end_row();
    }
}

void weight_profile_csv(const std::filesystem::path& path, const WeightProfile& p) {
    CsvWriter csv(path);
    csv.header({"eps", "re_f", "im_f", "region"});
    for (std::size_t i = 0; i < p.eps_grid.size(); ++i) {
        RegionLabel label = classify_region(p, p.eps_grid[i]);
        csv.field(p.eps_grid[i])
            .field(p.f_values[i].real())
            .field(p.f_values[i].imag())
            .field(static_cast<long>(label.label));
        csv.end_row();
    }
}

} // namespace

const std::vector<std::string>& known_figures() {
    static const std::vector<std::string> ids = {"dyn-exact",       "A1-log",     "A2-log",
                                                 "static2-example", "static-approx", "dyn-approx",
                                                 "dyn-error",       "4-per"};
    return ids;
}

void emit_figure_data(const std::string& figure_id, const std::filesystem::path& out_prefix,
                      const RefSeries* ref) {
    auto csv_path = [&](const std::string& suffix) {
        return std::filesystem::path(out_prefix.string() + suffix + ".csv");
    };
    auto gp_path = std::filesystem::path(out_prefix.string() + ".gp");

    if (figure_id == "dyn-exact") {
        const double eps = 0.012 * 0.012;
        const long n_max = 4000;
        long onset = onset_index(eps);
        Orbit orbit = iterate_dynamic({3.0, eps, 2.0 / 3.0}, n_max);
        CsvWriter csv(csv_path(""));
        csv.header({"n", "y", "onset"});
        for (long n = 0; n <= n_max; ++n) {
            csv.field(n).field(orbit[n]).field(static_cast<long>(n == onset ? 1 : 0));
            csv.end_row();
        }
        write_gp(gp_path, "set xlabel 'n'\nset ylabel 'y(n)'\nset arrow from " +
                              std::to_string(onset) + ",0 to " + std::to_string(onset) +
                              ",1 nohead lc 'red'\nplot '" + csv_path("").string() +
                              "' using 1:2 with dots title 'orbit'\n");
        return;
    }
    if (figure_id == "A1-log" || figure_id == "A2-log") {
        bool is_a1 = figure_id == "A1-log";
        WeightProfile p = is_a1 ? profile_f4(linspace(0.01, 0.60, 119))
                                : profile_f8(linspace(0.46, 0.60, 71));
        weight_profile_csv(csv_path(""), p);
        std::string vlines;
        for (double b : p.poles)
            vlines += "set arrow from " + format_double(b) + ", graph 0 to " + format_double(b) +
                      ", graph 1 nohead dt 2\n";
        for (double b : p.sign_changes)
            vlines += "set arrow from " + format_double(b) + ", graph 0 to " + format_double(b) +
                      ", graph 1 nohead dt 3\n";
        write_gp(gp_path, "set multiplot layout 2,1\nset xlabel 'eps'\n" + vlines +
                              "set ylabel 'Re f'\nplot '" + csv_path("").string() +
                              "' using 1:2 with lines title 'Re f'\nset ylabel 'Im f'\nplot '" +
                              csv_path("").string() +
                              "' using 1:3 with lines title 'Im f'\nunset multiplot\n");
        return;
    }
    if (figure_id == "static2-example") {
        approx_csv(csv_path("_2per"), 0.05, 600, false, false);
        approx_csv(csv_path("_4per"), 0.51, 400, true, false);
        write_gp(gp_path,
                 "set multiplot layout 2,2\nset xlabel 'n'\n"
                 "plot '" + csv_path("_2per").string() + "' using 1:3 with points title 'exact', '" +
                     csv_path("_2per").string() + "' using 1:4 with dots title 'approx'\n" +
                     "plot '" + csv_path("_4per").string() + "' using 1:3 with points title 'exact', '" +
                     csv_path("_4per").string() + "' using 1:4 with dots title 'approx'\n" +
                     "plot '" + csv_path("_2per").string() + "' using 1:5 with lines title 'error'\n" +
                     "plot '" + csv_path("_4per").string() + "' using 1:5 with lines title 'error'\n" +
                     "unset multiplot\n");
        return;
    }
    if (figure_id == "static-approx") {
        std::vector<double> grid = linspace(0.005, 0.1, 20);
        std::vector<ErrorReport> reports = error_sweep(SweepMode::Static2, grid);
        std::vector<double> overlay;
        bool warned = false;
        if (ref) overlay = align_reference(*ref, grid, &warned);
        {
            CsvWriter csv(csv_path("_2per"));
            if (overlay.empty())
                csv.header({"eps", "max_error"});
            else
                csv.header({"eps", "max_error", "ref_error"});
            for (std::size_t i = 0; i < reports.size(); ++i) {
                csv.field(grid[i]).field(reports[i].max_abs_error);
                if (!overlay.empty()) csv.field(overlay[i]);
                csv.end_row();
            }
        }
        {
            // Offsets sqrt(6)*eta = eps - eps0; all three sit inside the
            // attracting 4-cycle window.
            const double offsets[3] = {0.02, 0.04, 0.06};
            CsvWriter csv(csv_path("_4per"));
            csv.header({"sqrt6_eta", "branch0", "branch1", "branch2", "branch3"});
            for (double offset : offsets) {
                ErrorReport r = evaluate_error(SweepMode::Static4, eps0_static() + offset);
                csv.field(offset);
                for (double b : r.branch_tail_errors) csv.field(b);
                csv.end_row();
            }
        }
        write_gp(gp_path, "set multiplot layout 1,2\nset logscale y\nset xlabel 'eps'\nplot '" +
                              csv_path("_2per").string() +
                              "' using 1:2 with linespoints title 'max error'" +
                              (overlay.empty() ? std::string()
                                               : ", '" + csv_path("_2per").string() +
                                                     "' using 1:3 with linespoints title 'reference'") +
                              "\nset xlabel 'eta'\nplot for [c=2:5] '" + csv_path("_4per").string() +
                              "' using 1:c with linespoints title 'branch '.(c-2)\nunset multiplot\n");
        return;
    }
    if (figure_id == "dyn-approx") {
        const double eps = 0.001;
        approx_csv(csv_path(""), eps, 300, false, true);
        LandmarkSet l = landmarks(eps);
        std::string vlines;
        for (long mark : {l.n1, l.n2, l.n3})
            vlines += "set arrow from " + std::to_string(mark) + ", graph 0 to " +
                      std::to_string(mark) + ", graph 1 nohead dt 2\n";
        write_gp(gp_path, "set multiplot layout 2,1\nset xlabel 'n'\n" + vlines + "plot '" +
                              csv_path("").string() + "' using 1:3 with points title 'exact', '" +
                              csv_path("").string() + "' using 1:4 with dots title 'approx'\nplot '" +
                              csv_path("").string() +
                              "' using 1:5 with lines title 'error'\nunset multiplot\n");
        return;
    }
    if (figure_id == "dyn-error") {
        std::vector<double> grid = linspace(0.0005, 0.004, 8);
        std::vector<ErrorReport> reports = error_sweep(SweepMode::Dynamic, grid);
        std::vector<double> overlay;
        bool warned = false;
        if (ref) overlay = align_reference(*ref, grid, &warned);
        CsvWriter csv(csv_path(""));
        if (overlay.empty())
            csv.header({"eps", "err_region1", "err_region2", "err_region3"});
        else
            csv.header({"eps", "err_region1", "err_region2", "err_region3", "ref_error"});
        for (std::size_t i = 0; i < reports.size(); ++i) {
            csv.field(grid[i]);
            for (double e : reports[i].landmark_errors) csv.field(e);
            if (!overlay.empty()) csv.field(overlay[i]);
            csv.end_row();
        }
        write_gp(gp_path,
                 "set logscale y\nset xlabel 'eps'\nplot for [c=2:4] '" + csv_path("").string() +
                     "' using 1:c with linespoints title 'region '.(c-1)\n");
        return;
    }
    if (figure_id == "4-per") {
        double z0 = find_z0();
        CsvWriter csv(csv_path(""));
        csv.header({"z", "re_B", "im_B"});
        for (double z : linspace(0.0, 2.0, 401)) {
            auto b = b_dynamic(z);
            csv.field(z).field(b.real()).field(b.imag());
            csv.end_row();
        }
        write_gp(gp_path, "set multiplot layout 1,2\nset xlabel 'z'\nset arrow from " +
                              format_double(z0) + ", graph 0 to " + format_double(z0) +
                              ", graph 1 nohead dt 2\nplot '" + csv_path("").string() +
                              "' using 1:2 with lines title 'Re B'\nplot '" +
                              csv_path("").string() +
                              "' using 1:3 with lines title 'Im B'\nunset multiplot\n");
        return;
    }
    throw ConfigError("unknown figure id: " + figure_id);
}

std::vector<double> parse_grid(const std::string& spec) {
    std::istringstream in(spec);
    std::string lo_s, hi_s, steps_s;
    if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
        !std::getline(in, steps_s, ':'))
        throw ConfigError("grid spec must be lo:hi:steps, got '" + spec + "'");
    double lo = std::stod(lo_s);
    double hi = std::stod(hi_s);
    long steps = std::stol(steps_s);
    if (steps < 1 || steps > 1000000) throw ConfigError("grid spec: steps out of range");
    if (steps == 1) return {lo};
    if (!(lo < hi)) throw ConfigError("grid spec: need lo < hi");
    return linspace(lo, hi, static_cast<int>(steps));
}

} // namespace resummap
