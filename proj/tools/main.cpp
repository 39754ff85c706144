// Command-line front end: simulations, approximations, weight profiles,
// landmark indices, parameter sweeps, and figure-data emission.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>

#include "resummap/csv_io.hpp"
#include "resummap/dynamic_transseries.hpp"
#include "resummap/exp_weights.hpp"
#include "resummap/harness.hpp"
#include "resummap/map_core.hpp"
#include "resummap/static_transseries.hpp"

namespace {

using namespace resummap;

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct Output {
    std::unique_ptr<CsvWriter> writer;
    explicit Output(const std::string& path) {
        writer = path.empty() ? std::make_unique<CsvWriter>(std::cout)
                              : std::make_unique<CsvWriter>(std::filesystem::path(path));
    }
    CsvWriter& csv() { return *writer; }
};

void check_format(const std::string& format) {
    if (format != "csv") throw ConfigError("unsupported --format '" + format + "' (only csv)");
}

void emit_orbit(const Orbit& orbit, const std::string& out) {
    Output o(out);
    o.csv().header({"n", "y"});
    for (long n = 0; n < static_cast<long>(orbit.values.size()); ++n) {
        o.csv().field(n).field(orbit.values[static_cast<std::size_t>(n)]);
        o.csv().end_row();
    }
}

void emit_approx(const std::string& mode, double eps, long steps, const std::string& out) {
    Output o(out);
    o.csv().header({"n", "x", "exact", "approx", "error"});
    bool dynamic = mode == "dynamic";
    Orbit orbit = dynamic ? iterate_dynamic({3.0, eps, 2.0 / 3.0}, steps)
                          : iterate_static({eps, 2.0 / 3.0}, steps);
    for (long n = 0; n <= steps; ++n) {
        double x = eps * static_cast<double>(n);
        double approx = dynamic ? r_app_dynamic(x, eps)
                                : (mode == "static4" ? r4_app(x, eps) : r2_app(x, eps));
        o.csv().field(n).field(x).field(orbit[n]).field(approx).field(orbit[n] - approx);
        o.csv().end_row();
    }
}

void emit_weights(const std::string& kind, const std::string& grid_spec, const std::string& out) {
    Output o(out);
    if (kind == "dynamic") {
        std::vector<double> grid = parse_grid(grid_spec.empty() ? "0:2:401" : grid_spec);
        o.csv().header({"z", "re_B", "im_B"});
        for (double z : grid) {
            auto b = b_dynamic(z);
            o.csv().field(z).field(b.real()).field(b.imag());
            o.csv().end_row();
        }
        return;
    }
    WeightProfile p;
    if (kind == "per4")
        p = profile_f4(parse_grid(grid_spec.empty() ? "0.01:0.6:119" : grid_spec));
    else
        p = profile_f8(parse_grid(grid_spec.empty() ? "0.46:0.6:71" : grid_spec));
    if (p.poles.empty() || p.sign_changes.empty()) {
        // narrow scan: classify against a canonical wide profile instead
        WeightProfile wide =
            kind == "per4" ? profile_f4(parse_grid("0.01:0.6:119")) : profile_f8(parse_grid("0.46:0.6:71"));
        p.poles = wide.poles;
        p.sign_changes = wide.sign_changes;
    }
    o.csv().header({"eps", "re_f", "im_f", "region"});
    for (std::size_t i = 0; i < p.eps_grid.size(); ++i) {
        RegionLabel label = classify_region(p, p.eps_grid[i]);
        o.csv()
            .field(p.eps_grid[i])
            .field(p.f_values[i].real())
            .field(p.f_values[i].imag())
            .field(static_cast<long>(label.label));
        o.csv().end_row();
    }
}

void emit_sweep(const std::string& mode_name, const std::string& grid_spec, long steps,
                const std::string& ref_path, const std::string& out) {
    SweepMode mode = mode_name == "static2"  ? SweepMode::Static2
                     : mode_name == "static4" ? SweepMode::Static4
                                              : SweepMode::Dynamic;
    std::vector<double> grid = parse_grid(grid_spec);
    std::vector<ErrorReport> reports = error_sweep(mode, grid, steps);
    std::vector<double> overlay;
    if (!ref_path.empty()) {
        RefSeries ref = import_reference_errors(ref_path);
        bool warned = false;
        overlay = align_reference(ref, grid, &warned);
        if (warned)
            std::cerr << "warning: reference grid does not match sweep grid; "
                         "nearest-neighbour alignment used\n";
        if (overlay.empty()) std::cerr << "warning: reference file held no data rows\n";
    }

    Output o(out);
    std::vector<std::string> cols = {"eps", "max_error", "argmax_n"};
    if (mode == SweepMode::Static4)
        cols.insert(cols.end(), {"branch0", "branch1", "branch2", "branch3"});
    if (mode == SweepMode::Dynamic)
        cols.insert(cols.end(), {"err_region1", "err_region2", "err_region3"});
    if (!overlay.empty()) cols.push_back("ref_error");
    o.csv().header(cols);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const ErrorReport& r = reports[i];
        o.csv().field(r.eps).field(r.max_abs_error).field(r.argmax_n);
        if (mode == SweepMode::Static4)
            for (double b : r.branch_tail_errors) o.csv().field(b);
        if (mode == SweepMode::Dynamic)
            for (double e : r.landmark_errors) o.csv().field(e);
        if (!overlay.empty()) o.csv().field(overlay[i]);
        o.csv().end_row();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transasymptotic approximations for static and slowly-varying logistic maps"};
    app.require_subcommand(1);

    std::string out, format = "csv", grid_spec, ref_path, grouping = "paren";
    double eps = 0.0, y0 = 2.0 / 3.0, lambda0 = 3.0;
    long steps = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "output path (stdout when omitted)");
        cmd->add_option("--format", format, "output format")->capture_default_str();
    };

    auto* simulate = app.add_subcommand("simulate", "iterate a map exactly and dump the orbit");
    std::string sim_kind;
    simulate->add_option("kind", sim_kind, "static|dynamic")
        ->required()
        ->check(CLI::IsMember({"static", "dynamic"}));
    simulate->add_option("--eps", eps, "parameter offset / increment")->required();
    simulate->add_option("--y0", y0, "initial value")->capture_default_str();
    simulate->add_option("--lambda0", lambda0, "dynamic base parameter")->capture_default_str();
    simulate->add_option("--steps", steps, "iteration count")->default_val(1000);
    add_common(simulate);

    auto* approx = app.add_subcommand("approx", "compare an approximation against the exact orbit");
    std::string approx_kind;
    approx->add_option("kind", approx_kind, "static2|static4|dynamic")
        ->required()
        ->check(CLI::IsMember({"static2", "static4", "dynamic"}));
    approx->add_option("--eps", eps, "parameter")->required();
    approx->add_option("--steps", steps, "iteration count")->default_val(600);
    add_common(approx);

    auto* weights = app.add_subcommand("weights", "exponential weight profiles");
    std::string weights_kind;
    weights->add_option("kind", weights_kind, "per4|per8|dynamic")
        ->required()
        ->check(CLI::IsMember({"per4", "per8", "dynamic"}));
    weights->add_option("--eps-grid", grid_spec, "lo:hi:steps grid");
    add_common(weights);

    auto* marks = app.add_subcommand("landmarks", "K and the three landmark indices");
    marks->add_option("--eps", eps, "parameter")->required();
    marks->add_option("--grouping", grouping, "paren|literal landmark reading")
        ->check(CLI::IsMember({"paren", "literal"}))
        ->capture_default_str();
    add_common(marks);

    auto* sweep = app.add_subcommand("sweep", "error metrics over a parameter grid");
    std::string sweep_mode;
    sweep->add_option("--mode", sweep_mode, "static2|static4|dynamic")
        ->required()
        ->check(CLI::IsMember({"static2", "static4", "dynamic"}));
    sweep->add_option("--eps-grid", grid_spec, "lo:hi:steps grid")->required();
    sweep->add_option("--steps", steps, "comparison range (mode default when omitted)");
    sweep->add_option("--ref", ref_path, "reference error CSV (columns eps,error) to overlay");
    add_common(sweep);

    auto* figure = app.add_subcommand("figure", "emit CSV + gnuplot script for a known figure");
    std::string figure_id;
    figure->add_option("--id", figure_id, "figure id")->required();
    figure->add_option("--ref", ref_path, "reference error CSV to overlay");
    figure->add_option("--out", out, "output path prefix")->required();
    figure->add_option("--format", format, "output format")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        check_format(format);
        if (simulate->parsed()) {
            if (sim_kind == "static")
                emit_orbit(iterate_static({eps, y0}, steps), out);
            else
                emit_orbit(iterate_dynamic({lambda0, eps, y0}, steps), out);
        } else if (approx->parsed()) {
            if (approx_kind == "dynamic" && !approx->count("--steps"))
                steps = std::lround(0.3 / eps);
            emit_approx(approx_kind, eps, steps, out);
        } else if (weights->parsed()) {
            emit_weights(weights_kind, grid_spec, out);
        } else if (marks->parsed()) {
            LandmarkSet l =
                landmarks(eps, grouping == "paren" ? Grouping::Paren : Grouping::Literal);
            Output o(out);
            o.csv().header({"eps", "K", "n1", "n2", "n3"});
            o.csv().field(eps).field(l.K).field(l.n1).field(l.n2).field(l.n3);
            o.csv().end_row();
        } else if (sweep->parsed()) {
            emit_sweep(sweep_mode, grid_spec, steps, ref_path, out);
        } else if (figure->parsed()) {
            const RefSeries* ref = nullptr;
            RefSeries ref_data;
            if (!ref_path.empty()) {
                ref_data = import_reference_errors(ref_path);
                ref = &ref_data;
            }
            emit_figure_data(figure_id, out, ref);
        }
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CsvParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
