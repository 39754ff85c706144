#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "resummap/map_core.hpp"

using namespace resummap;

namespace {
double map_once(double y, double eps) { return (3.0 + eps) * y * (1.0 - y); }
} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(iterate_static({0.05, 0.0}, 1), ConfigError);
    CHECK_THROWS_AS(iterate_static({0.05, 1.0}, 1), ConfigError);
    CHECK_THROWS_AS(iterate_static({1.5, 0.5}, 1), ConfigError); // lambda > 4
    CHECK_THROWS_AS(iterate_static({-3.5, 0.5}, 1), ConfigError);
    CHECK_THROWS_AS(iterate_dynamic({3.0, -0.1, 0.5}, 1), ConfigError);
    CHECK_THROWS_AS(iterate_static({0.05, 0.5}, -1), ConfigError);
}

TEST_CASE("static iteration: fixed point of lambda = 3 stays put") {
    Orbit o = iterate_static({0.0, 2.0 / 3.0}, 5);
    REQUIRE(o.values.size() == 6);
    for (double v : o.values) CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("static iteration: lambda = 4 endpoint mapping") {
    Orbit o = iterate_static({1.0, 0.5}, 2);
    CHECK(o.values[1] == doctest::Approx(1.0));
    CHECK(o.values[2] == doctest::Approx(0.0));
}

TEST_CASE("static iteration tail alternates on the closed-form 2-cycle") {
    Orbit o = iterate_static({0.05, 2.0 / 3.0}, 10000);
    Cycle c = two_cycle(0.05);
    double lo = std::min(o.values[9999], o.values[10000]);
    double hi = std::max(o.values[9999], o.values[10000]);
    CHECK(std::abs(lo - c.points[0]) < 1e-10);
    CHECK(std::abs(hi - c.points[1]) < 1e-10);
}

TEST_CASE("orbit confinement for valid static configs") {
    for (double eps : {-0.5, 0.0, 0.3, 0.7, 1.0}) {
        for (double y0 : {0.01, 0.25, 0.66, 0.97}) {
            Orbit o = iterate_static({eps, y0}, 500);
            for (double v : o.values) {
                REQUIRE(v >= 0.0);
                REQUIRE(v <= 1.0);
            }
        }
    }
}

TEST_CASE("dynamic iteration basics") {
    Orbit single = iterate_dynamic({3.0, 0.001, 2.0 / 3.0}, 0);
    REQUIRE(single.values.size() == 1);
    CHECK(single.values[0] == 2.0 / 3.0);

    // lambda = 3 + eps n crosses 4 at n = 1000
    CHECK_THROWS_AS(iterate_dynamic({3.0, 0.001, 2.0 / 3.0}, 2000), DomainEscapeError);
    try {
        iterate_dynamic({3.0, 0.001, 2.0 / 3.0}, 2000);
    } catch (const DomainEscapeError& e) {
        CHECK(e.step == 1001);
    }

    Orbit cascade = iterate_dynamic({3.0, 0.012 * 0.012, 2.0 / 3.0}, 4000);
    REQUIRE(cascade.values.size() == 4001);
    for (double v : cascade.values) {
        REQUIRE(v > 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("nonperiodic fixed point") {
    CHECK(nonperiodic_fixed_point(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(nonperiodic_fixed_point(1.0) == doctest::Approx(0.75).epsilon(1e-15));
    for (double eps : {-0.2, 0.0, 0.05, 0.51, 1.0}) {
        double fp = nonperiodic_fixed_point(eps);
        CHECK(std::abs(map_once(fp, eps) - fp) < 1e-14);
    }
}

TEST_CASE("two-cycle closed form") {
    Cycle degenerate = two_cycle(0.0);
    CHECK(degenerate.points[0] == doctest::Approx(2.0 / 3.0));
    CHECK(degenerate.points[1] == doctest::Approx(2.0 / 3.0));
    CHECK(degenerate.multiplier == doctest::Approx(1.0));

    double eps_boundary = std::sqrt(6.0) - 2.0;
    CHECK(std::abs(two_cycle(eps_boundary).multiplier + 1.0) < 1e-14);

    CHECK_THROWS_AS(two_cycle(-0.1), ComplexCycleError);

    Cycle closed = two_cycle(0.05);
    Cycle newton = find_cycle(0.05, 2, std::vector<double>{0.6, 0.75});
    for (int i = 0; i < 2; ++i)
        CHECK(std::abs(closed.points[static_cast<std::size_t>(i)] -
                       newton.points[static_cast<std::size_t>(i)]) < 1e-12);
    // both points actually lie on the 2-cycle
    for (double p : closed.points)
        CHECK(std::abs(map_once(map_once(p, 0.05), 0.05) - p) < 1e-14);
}

TEST_CASE("find_cycle across periods") {
    std::vector<double> seed{0.6};
    Cycle fp = find_cycle(0.2, 1, seed);
    CHECK(fp.points[0] == doctest::Approx(nonperiodic_fixed_point(0.2)).epsilon(1e-12));

    // closed-form consistency across the stable 2-cycle window
    for (double eps : {0.02, 0.1, 0.2, 0.3, 0.4, 0.44}) {
        Cycle closed = two_cycle(eps);
        Cycle c2 = find_cycle(eps, 2, closed.points);
        CHECK(std::abs(c2.points[0] - closed.points[0]) < 1e-12);
        CHECK(std::abs(c2.points[1] - closed.points[1]) < 1e-12);
    }

    // 4-cycle at eps = 0.51, seeded from the settled orbit tail, equals the
    // long-iteration branch values
    Orbit o = iterate_static({0.51, 2.0 / 3.0}, 4000);
    std::vector<double> tail(o.values.end() - 4, o.values.end());
    Cycle c4 = find_cycle(0.51, 4, tail);
    std::vector<double> sorted_tail = tail;
    std::sort(sorted_tail.begin(), sorted_tail.end());
    std::vector<double> sorted_cycle = c4.points;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(sorted_cycle[static_cast<std::size_t>(i)] -
                       sorted_tail[static_cast<std::size_t>(i)]) < 1e-8);
    CHECK(std::abs(c4.multiplier) < 1.0);

    // smallest point leads, orbit order preserved
    CHECK(c4.points[0] == *std::min_element(c4.points.begin(), c4.points.end()));
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(map_once(c4.points[static_cast<std::size_t>(i)], 0.51) -
                       c4.points[static_cast<std::size_t>((i + 1) % 4)]) < 1e-10);

    CHECK_THROWS_AS(find_cycle(0.0, 2, std::vector<double>{0.6}), DegenerateCycleError);
    CHECK_THROWS_AS(find_cycle(0.1, 4, std::vector<double>{0.6}), DegenerateCycleError);
    CHECK_THROWS_AS(find_cycle(0.1, 3, std::vector<double>{0.6}), ConfigError);
}

TEST_CASE("8-cycle exists in the stable window") {
    Orbit o = iterate_static({0.555, 2.0 / 3.0}, 8000);
    std::vector<double> tail(o.values.end() - 8, o.values.end());
    Cycle c8 = find_cycle(0.555, 8, tail);
    CHECK(c8.period == 8);
    CHECK(std::abs(c8.multiplier) < 1.0);
}

TEST_CASE("multiplier identities on an eps grid") {
    for (int i = 0; i <= 20; ++i) {
        double eps = 0.025 * i;
        double fp = nonperiodic_fixed_point(eps);
        CHECK(std::abs(cycle_multiplier(std::vector<double>{fp}, eps) + (1.0 + eps)) < 1e-14);
        if (eps > 0.0) {
            Cycle c = two_cycle(eps);
            CHECK(std::abs(cycle_multiplier(c, eps) - (1.0 - eps * (4.0 + eps))) < 1e-13);
        }
    }
}

TEST_CASE("doubled 2-cycle at the period-doubling point has multiplier +1") {
    double eps0 = std::sqrt(6.0) - 2.0;
    Cycle c = two_cycle(eps0);
    std::vector<double> doubled{c.points[0], c.points[1], c.points[0], c.points[1]};
    CHECK(std::abs(cycle_multiplier(doubled, eps0) - 1.0) < 1e-8);
    CHECK(std::abs(cycle_multiplier(doubled, eps0, true) - 1.0) < 1e-8);
}

TEST_CASE("compensated multiplier agrees with plain product") {
    Cycle c4 = four_cycle(0.52);
    double plain = cycle_multiplier(c4.points, 0.52);
    double comp = cycle_multiplier(c4.points, 0.52, true);
    CHECK(std::abs(plain - comp) < 1e-12 * std::abs(plain) + 1e-15);
}

TEST_CASE("stability implies the orbit tail settles to the cycle") {
    for (double eps : {0.05, 0.2, 0.4}) {
        Cycle c = two_cycle(eps);
        REQUIRE(std::abs(c.multiplier) < 1.0);
        Orbit o = iterate_static({eps, 2.0 / 3.0}, 10000);
        double lo = std::min(o.values[9999], o.values[10000]);
        double hi = std::max(o.values[9999], o.values[10000]);
        CHECK(std::abs(lo - c.points[0]) < 1e-8);
        CHECK(std::abs(hi - c.points[1]) < 1e-8);
    }
}

TEST_CASE("four_cycle continuation into the unstable range") {
    Cycle c = four_cycle(0.56); // beyond the 4->8 doubling, cycle is unstable
    CHECK(c.period == 4);
    CHECK(std::abs(c.multiplier) > 1.0);
    double y = c.points[0];
    for (int i = 0; i < 4; ++i) y = map_once(y, 0.56);
    CHECK(std::abs(y - c.points[0]) < 1e-9);
    CHECK_THROWS_AS(four_cycle(0.3), RegimeError);
}
