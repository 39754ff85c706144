#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resummap/dynamic_transseries.hpp"
#include "resummap/exp_weights.hpp"
#include "resummap/harness.hpp"
#include "resummap/map_core.hpp"
#include "resummap/static_transseries.hpp"

namespace py = pybind11;
using namespace resummap;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transasymptotic approximations for static and slowly-varying logistic maps";

    py::register_exception<Error>(m, "ResummapError", PyExc_RuntimeError);

    py::class_<Cycle>(m, "Cycle")
        .def_readonly("period", &Cycle::period)
        .def_readonly("points", &Cycle::points)
        .def_readonly("multiplier", &Cycle::multiplier);

    py::class_<WeightProfile>(m, "WeightProfile")
        .def_readonly("eps_grid", &WeightProfile::eps_grid)
        .def_readonly("f_values", &WeightProfile::f_values)
        .def_readonly("poles", &WeightProfile::poles)
        .def_readonly("sign_changes", &WeightProfile::sign_changes);

    py::enum_<Region>(m, "Region")
        .value("R1", Region::R1)
        .value("R2", Region::R2)
        .value("R3", Region::R3);

    py::class_<LandmarkSet>(m, "LandmarkSet")
        .def_readonly("K", &LandmarkSet::K)
        .def_readonly("n1", &LandmarkSet::n1)
        .def_readonly("n2", &LandmarkSet::n2)
        .def_readonly("n3", &LandmarkSet::n3);

    // map core
    m.def(
        "iterate_static",
        [](double eps, double y0, long n_steps) {
            return iterate_static({eps, y0}, n_steps).values;
        },
        py::arg("eps"), py::arg("y0") = 2.0 / 3.0, py::arg("n_steps") = 1000);
    m.def(
        "iterate_dynamic",
        [](double eps, double y0, long n_steps, double lambda0) {
            return iterate_dynamic({lambda0, eps, y0}, n_steps).values;
        },
        py::arg("eps"), py::arg("y0") = 2.0 / 3.0, py::arg("n_steps") = 1000,
        py::arg("lambda0") = 3.0);
    m.def("nonperiodic_fixed_point", &nonperiodic_fixed_point, py::arg("eps"));
    m.def("two_cycle", &two_cycle, py::arg("eps"));
    m.def(
        "find_cycle",
        [](double eps, int period, const std::vector<double>& seed) {
            return find_cycle(eps, period, seed);
        },
        py::arg("eps"), py::arg("period"), py::arg("seed"));
    m.def("four_cycle", &four_cycle, py::arg("eps"));
    m.def(
        "cycle_multiplier",
        [](const std::vector<double>& points, double eps, bool compensated) {
            return cycle_multiplier(points, eps, compensated);
        },
        py::arg("points"), py::arg("eps"), py::arg("compensated") = false);

    // static transseries
    m.def("r2_app", &r2_app, py::arg("x"), py::arg("eps"));
    m.def("r4_app", &r4_app, py::arg("x"), py::arg("eps"));
    m.def("residual_2per", &residual_2per, py::arg("eps"), py::arg("n_max") = 600);
    m.def("eps0_static", &eps0_static);
    m.def("omega_o0", &omega_o0, py::arg("tau"));
    m.def("omega_e0", &omega_e0, py::arg("tau"));
    m.def("omega_o1", &omega_o1, py::arg("tau"));
    m.def("omega_e1", &omega_e1, py::arg("tau"));
    m.def(
        "theta_leading",
        [](Complex tau1, int alpha) {
            ThetaSet t = theta_leading(tau1, theta_constants(alpha));
            return std::vector<Complex>{t.t1, t.t2, t.t3, t.t4};
        },
        py::arg("tau1"), py::arg("alpha") = 1);
    m.def("f4", &f4, py::arg("eps"));
    m.def("b_weight", &b_weight, py::arg("x"), py::arg("eps"));
    m.def(
        "sigma0_coefficients",
        [](int order) {
            std::vector<std::pair<long long, long long>> out;
            for (const Rational& r : solve_sigma0(order).coeffs) out.emplace_back(r.num(), r.den());
            return out;
        },
        py::arg("order") = 2, "Exact rational coefficients (num, den) of the sigma0 series.");
    m.def(
        "sigma1_coefficients",
        [](int order) {
            Sigma1Series s = solve_sigma1(order);
            return std::vector<std::pair<double, std::string>>{{s.s0.value(), s.s0.str()},
                                                               {s.s1.value(), s.s1.str()}};
        },
        py::arg("order") = 1, "Radical sigma1 coefficients as (value, exact form) pairs.");
    m.def("leading_coeff_odd", [](int m) { return leading_coeff_odd(m).value(); }, py::arg("m"));
    m.def("leading_coeff_even", [](int m) { return leading_coeff_even(m).value(); }, py::arg("m"));
    m.def("sigma1_matching_oracle", &sigma1_matching_oracle, py::arg("eta"));

    // exponential weights
    m.def("profile_f4", [](const std::vector<double>& grid) { return profile_f4(grid); },
          py::arg("eps_grid"));
    m.def("profile_f8", [](const std::vector<double>& grid) { return profile_f8(grid); },
          py::arg("eps_grid"));
    m.def("f8", &f8, py::arg("eps"));
    m.def(
        "classify_region",
        [](const WeightProfile& p, double eps) { return classify_region(p, eps).label; },
        py::arg("profile"), py::arg("eps"));
    m.def("periodicity_of", &periodicity_of, py::arg("f_im_slope"));

    // dynamic transseries
    m.def("action_A", &action_A, py::arg("x"));
    m.def("r10", &r10, py::arg("x"));
    m.def("rm0_table", &rm0_table, py::arg("x"), py::arg("m_max"));
    m.def("overline_sigma0", &overline_sigma0, py::arg("x"));
    m.def("overline_tau0", &overline_tau0, py::arg("x"), py::arg("eps"));
    m.def("r_app_dynamic", &r_app_dynamic, py::arg("x"), py::arg("eps"));
    m.def("b_dynamic", &b_dynamic, py::arg("z"));
    m.def("find_z0", &find_z0);
    m.def("onset_index", &onset_index, py::arg("eps"));

    // harness
    m.def("solve_K", &solve_K, py::arg("eps"));
    m.def(
        "landmarks",
        [](double eps, const std::string& grouping) {
            return landmarks(eps, grouping == "literal" ? Grouping::Literal : Grouping::Paren);
        },
        py::arg("eps"), py::arg("grouping") = "paren");
}
