#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "resummap/dynamic_transseries.hpp"
#include "resummap/harness.hpp"
#include "resummap/map_core.hpp"
#include "resummap/static_transseries.hpp"

using namespace resummap;

namespace {

constexpr double kPi = std::numbers::pi;

// Printed closed forms of the perturbative coefficients, built as jets so the
// comparison covers derivatives as well as values.
Jet r01_closed(double x, int order) {
    Jet X = Jet::variable(x, order);
    return (-1.0 * Jet::constant(1.0, x, order)) / ((X + 2.0) * (X + 3.0) * (X + 3.0));
}

Jet r02_closed(double x, int order) {
    Jet X = Jet::variable(x, order);
    Jet num = X * X + X - 4.0;
    Jet d2 = (X + 2.0) * (X + 2.0) * (X + 2.0);
    Jet d3 = (X + 3.0) * (X + 3.0) * (X + 3.0);
    return num / (d2 * d3);
}

Jet r03_closed(double x, int order) {
    Jet X = Jet::variable(x, order);
    Jet x2 = X * X;
    Jet num = x2 * x2 - 2.0 * (x2 * X) - 28.0 * x2 - 33.0 * X + 24.0;
    Jet d2 = (X + 2.0) * (X + 2.0) * (X + 2.0) * (X + 2.0) * (X + 2.0);
    Jet d3 = (X + 3.0) * (X + 3.0) * (X + 3.0) * (X + 3.0);
    return (-1.0 * num) / (d2 * d3);
}

} // namespace

TEST_CASE("jet arithmetic basics") {
    Jet X = Jet::variable(0.0, 5);
    Jet inv = Jet::constant(1.0, 0.0, 5) / (X + 1.0);
    for (int i = 0; i <= 5; ++i) CHECK(inv.coeff(i) == doctest::Approx(i % 2 ? -1.0 : 1.0));
    Jet d = inv.derivative_jet();
    CHECK(d.order() == 4);
    CHECK(d.value() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(inv.derivative(7), InsufficientOrderError);
    CHECK_THROWS_AS(Jet::constant(1.0, 0.0, 0).derivative_jet(), InsufficientOrderError);
    Jet prod = (X + 2.0) * (X + 2.0);
    CHECK(prod.coeff(0) == doctest::Approx(4.0));
    CHECK(prod.coeff(1) == doctest::Approx(4.0));
    CHECK(prod.coeff(2) == doctest::Approx(1.0));

    // log and power composition: log(1+x) coefficients and a fractional power
    Jet lg = log(X + 1.0);
    for (int i = 1; i <= 5; ++i)
        CHECK(lg.coeff(i) == doctest::Approx((i % 2 ? 1.0 : -1.0) / i).epsilon(1e-14));
    Jet half = pow(X + 1.0, 0.5);
    CHECK(half.coeff(1) == doctest::Approx(0.5));
    CHECK(half.coeff(2) == doctest::Approx(-0.125));
    CHECK_THROWS_AS(log(X - 1.0), ConfigError);
}

TEST_CASE("first sector coefficient built via jet composition") {
    for (double x : {0.3, 1.0, 2.5}) {
        Jet X = Jet::variable(x, 4);
        Jet r = (3.0 * pow(X + 2.0, 2.0)) / (4.0 * pow(X + 1.0, 1.5) * (X + 3.0));
        CHECK(r.value() == doctest::Approx(r10(x)).epsilon(1e-14));
        // the jet derivative satisfies the defining differential equation
        double residual = (x + 1.0) * r.derivative(1) +
                          (2.0 / (x + 2.0) - 2.0 / (x + 3.0) + 0.5) * r.value();
        CHECK(std::abs(residual) < 1e-12);
    }
}

TEST_CASE("action of the first sector") {
    CHECK(std::abs(action_A(0.0)) == 0.0);
    CHECK(action_A(1.0).real() == doctest::Approx(1.0 - 2.0 * std::log(2.0)).epsilon(1e-15));
    // exp(-A'(x)) = -(1+x), checked via central differences at x = 1
    double h = 1e-6;
    std::complex<double> deriv = (action_A(1.0 + h) - action_A(1.0 - h)) / (2.0 * h);
    CHECK(std::abs(std::exp(-deriv) - std::complex<double>(-2.0, 0.0)) < 1e-8);
    CHECK_THROWS_AS(action_A(-1.0), ConfigError);
}

TEST_CASE("perturbative coefficients from the jet recurrence match closed forms") {
    for (double x : {0.0, 0.5, 1.0, 2.0, 2.7}) {
        auto jets = r0_series(x, 3);
        REQUIRE(jets.size() == 4);
        CHECK(jets[0].value() == doctest::Approx((2.0 + x) / (3.0 + x)).epsilon(1e-15));
        Jet c1 = r01_closed(x, jets[1].order());
        Jet c2 = r02_closed(x, jets[2].order());
        Jet c3 = r03_closed(x, jets[3].order());
        for (int d = 0; d <= 2; ++d) {
            CHECK(jets[1].derivative(d) == doctest::Approx(c1.derivative(d)).epsilon(1e-12));
            CHECK(jets[2].derivative(d) == doctest::Approx(c2.derivative(d)).epsilon(1e-12));
            CHECK(jets[3].derivative(d) == doctest::Approx(c3.derivative(d)).epsilon(1e-12));
        }
    }
    // printed spot values
    auto jets = r0_series(0.0, 3);
    CHECK(jets[1].value() == doctest::Approx(-1.0 / 18.0).epsilon(1e-14));
    CHECK(jets[2].value() == doctest::Approx(-1.0 / 54.0).epsilon(1e-14));
    CHECK(jets[3].value() == doctest::Approx(-1.0 / 108.0).epsilon(1e-14));

    // order budget: with no reserve, derivatives of the last coefficient are
    // exhausted
    auto tight = r0_series(1.0, 2, 0);
    CHECK_THROWS_AS(tight[2].derivative(1), InsufficientOrderError);
}

TEST_CASE("first sector coefficient and its differential equation") {
    CHECK(r10(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r10(1.0) == doctest::Approx(27.0 / (32.0 * std::numbers::sqrt2)).epsilon(1e-15));
    for (double x : {0.5, 1.0, 3.0}) {
        // analytic log-derivative of the closed form
        double deriv = r10(x) * (2.0 / (x + 2.0) - 1.5 / (x + 1.0) - 1.0 / (x + 3.0));
        double residual =
            (x + 1.0) * deriv + (2.0 / (x + 2.0) - 2.0 / (x + 3.0) + 0.5) * r10(x);
        CHECK(std::abs(residual) < 1e-12);
    }
}

TEST_CASE("higher sector coefficients") {
    double x = 1.0;
    auto table = rm0_table(x, 5);
    CHECK(table[0] == doctest::Approx(r10(x)).epsilon(1e-15));
    // bracket at m = 2, x = 1 is (1+1)^2 + 2 = 6
    CHECK(table[1] == doctest::Approx(-4.0 * r10(1.0) * r10(1.0) / 6.0).epsilon(1e-14));

    CHECK_THROWS_AS(rm0_table(0.0, 3), ResonanceError);

    // R_{2,0}/(x sigma0bar)^2 -> -3/2 toward x = 0
    double prev_dev = 1e300;
    for (double xs : {0.02, 0.01, 0.005}) {
        auto t = rm0_table(xs, 2);
        double ratio = t[1] / (xs * overline_sigma0(xs) * xs * overline_sigma0(xs));
        double dev = std::abs(ratio + 1.5);
        CHECK(dev < 5e-2);
        CHECK(dev < prev_dev);
        prev_dev = dev;
    }
}

TEST_CASE("sigma0bar identity and limits") {
    for (int i = 1; i <= 300; ++i) {
        double x = 0.01 * i;
        CHECK(std::abs(x * overline_sigma0(x) - r10(x)) < 1e-14);
    }
    CHECK(1e-8 * overline_sigma0(1e-8) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(overline_sigma0(1.0) == doctest::Approx(27.0 / (32.0 * std::numbers::sqrt2)));
    CHECK_THROWS_AS(overline_sigma0(0.0), PoleError);
}

TEST_CASE("dynamic sigma0") {
    CHECK(sigma0_dynamic(0) == Rational(1, 18));
    auto jets = r0_series(0.0, 1);
    CHECK(sigma0_dynamic(0).value() == doctest::Approx(-jets[1].value()).epsilon(1e-14));
    CHECK_THROWS_AS(sigma0_dynamic(1), InsufficientOrderError);
}

TEST_CASE("tau0bar equals the explicit display form") {
    double worst = 0.0;
    for (double x : {0.05, 0.1, 0.25, 0.5}) {
        for (double eps : {0.01, 0.005, 0.002, 0.001, 0.0005}) {
            std::complex<double> a(x - (x + 1.0) * std::log1p(x), kPi * x);
            std::complex<double> display = eps * (x + 2.0) * (x + 2.0) * std::exp(-a / eps) /
                                           (24.0 * std::sqrt(x) * std::pow(x + 1.0, 1.5) *
                                            (x + 3.0));
            std::complex<double> got = overline_tau0(x, eps);
            worst = std::max(worst, std::abs(got - display) / std::abs(display));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("tau0bar growth and lattice phase") {
    double eps = 0.001;
    // once the action term dominates the 1/sqrt(x) prefactor the magnitude
    // grows monotonically with n
    long n_start = static_cast<long>(std::ceil(2.0 / std::sqrt(eps)));
    double prev = overline_tau0_log(eps * n_start, eps).log_mag;
    for (long n = n_start + 1; n <= n_start + 200; ++n) {
        double cur = overline_tau0_log(eps * n, eps).log_mag;
        CHECK(cur > prev);
        prev = cur;
    }
    // phase advances by pi per step
    for (long n : {5L, 6L, 137L}) {
        double p1 = overline_tau0_log(eps * n, eps).phase;
        double p2 = overline_tau0_log(eps * (n + 1), eps).phase;
        CHECK(std::abs((p1 - p2) - kPi) < 1e-9);
    }
    // overflow guard hands out the log form instead
    CHECK_THROWS_AS(overline_tau0(1.0, 0.0005), ConsistencyError);
    CHECK(std::isfinite(overline_tau0_log(1.0, 0.0005).log_mag));
}

TEST_CASE("dynamic approximation against the exact orbit") {
    CHECK(r_app_dynamic(0.0, 0.001) == doctest::Approx(2.0 / 3.0));
    double eps = 0.001;
    for (long n = 1; n <= 5; ++n)
        CHECK(std::abs(r_app_dynamic(eps * n, eps) - 2.0 / 3.0) < 0.01);

    Orbit o = iterate_dynamic({3.0, eps, 2.0 / 3.0}, 300);
    double worst = 0.0;
    for (long n = 0; n <= 300; ++n)
        worst = std::max(worst, std::abs(o[n] - r_app_dynamic(eps * n, eps)));
    CHECK(worst < 5e-3);
    CHECK_THROWS_AS(r_app_dynamic(0.5, -1.0), ConfigError);
    CHECK_THROWS_AS(r_app_dynamic(eps * 10.5, eps), ConsistencyError);
}

TEST_CASE("dilation-to-translation reduction residual shrinks with x") {
    // Omega0(y + x) = (3+x) Omega0(y) (1 - Omega0(y)) up to the truncation
    // order, with tau_bar(y, x) built from the translated exponent.
    auto tau_bar_of_y = [](double y, double x) {
        return overline_sigma0(x) * std::sqrt(x) *
               std::exp(std::complex<double>(std::log1p(x) * y / x, -kPi * y / x));
    };
    double prev = 1e300;
    for (double x : {0.2, 0.1, 0.05, 0.025}) {
        double worst = 0.0;
        for (int k = 1; k <= 5; ++k) {
            double y = x * k;
            auto om = [&](double yy) { return omega0_resummed(tau_bar_of_y(yy, x), x); };
            std::complex<double> lhs = om(y + x);
            std::complex<double> rhs = (3.0 + x) * om(y) * (1.0 - om(y));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(worst < 0.5 * prev); // at least first order in x
        prev = worst;
    }
}

TEST_CASE("4-periodic dynamic weight") {
    CHECK(std::abs(b_dynamic(0.0)) == 0.0);
    CHECK(b_dynamic_deriv(0.1).imag() == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(b_dynamic_deriv(0.5).imag() == doctest::Approx(-1.5 * kPi).epsilon(1e-15));

    double ra = std::sqrt(5.0) - 2.0;
    CHECK_THROWS_AS(b_dynamic(ra), PoleError);
    CHECK_THROWS_AS(b_dynamic(-0.2), ConfigError);
    CHECK_THROWS_AS(b_dynamic(5.0), ConfigError);

    // Re B continuous across the branch point while Im B' jumps
    double left = b_dynamic(ra - 1e-7).real();
    double right = b_dynamic(ra + 1e-7).real();
    CHECK(std::abs(left - right) < 1e-5);
    CHECK(b_dynamic_deriv(ra - 1e-7).imag() == doctest::Approx(-kPi));
    CHECK(b_dynamic_deriv(ra + 1e-7).imag() == doctest::Approx(-1.5 * kPi));

    // numerically differentiated B matches the analytic slope away from the
    // branch point
    for (double z : {0.05, 0.15, 0.4, 0.9, 1.5}) {
        double h = 1e-6;
        std::complex<double> num = (b_dynamic(z + h) - b_dynamic(z - h)) / (2.0 * h);
        CHECK(std::abs(num - b_dynamic_deriv(z)) < 1e-8);
    }
}

TEST_CASE("onset of the second doubling") {
    double z0 = find_z0();
    CHECK(std::abs(z0 - 0.9951) < 5e-4);
    CHECK(onset_index(0.012 * 0.012) == 3455);
    // n ~ 0.4975/eps
    CHECK(static_cast<double>(onset_index(0.001)) ==
          doctest::Approx(0.4975 / 0.001).epsilon(2e-3));
}
