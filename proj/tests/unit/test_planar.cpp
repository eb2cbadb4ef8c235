#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "polar/planar.hpp"
#include "polar/search.hpp"

using namespace polar;

TEST_CASE("angles are wrapped and sorted") {
    const PlanarConfig c({7.0, -1.0, 0.5});
    CHECK(c.angles()[0] == doctest::Approx(0.5));
    CHECK(c.angles()[1] == doctest::Approx(7.0 - 2 * M_PI));
    CHECK(c.angles()[2] == doctest::Approx(2 * M_PI - 1.0));
    CHECK(wrap_angle(-2 * M_PI) == doctest::Approx(0.0));
    CHECK(chord(0.0, M_PI) == doctest::Approx(2.0));
    const auto back = PlanarConfig::from_configuration(c.to_configuration());
    for (std::size_t k = 0; k < 3; ++k) CHECK(back.angles()[k] == doctest::Approx(c.angles()[k]).epsilon(1e-14));
}

TEST_CASE("squaring map doubles inner products") {
    const auto lines = random_configuration(5, 2, 3);
    const auto pc = PlanarConfig::from_configuration(lines);
    for (double phi : {0.0, 0.4, 2.0, 5.1}) {
        const auto sq = squared_map(pc, phi);
        const std::vector<double> v{std::cos(phi), std::sin(phi)};
        for (std::size_t i = 0; i < pc.size(); ++i) {
            const double ip = std::abs(std::cos(phi - pc.angles()[i]));
            const double a = 2.0 * pc.angles()[i];
            CHECK(chord(sq.mapped_point, a) == doctest::Approx(2.0 * ip).epsilon(1e-12));
        }
    }
}

TEST_CASE("Riesz energy of roots of unity") {
    CHECK(riesz_energy_closed(2, 1) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(riesz_energy_closed(4, 2) == doctest::Approx(32.0).epsilon(1e-14));
    for (int n = 2; n <= 9; ++n) {
        CHECK(riesz_energy(equidistributed(n), 2.0) == doctest::Approx(2.0 * n * n).epsilon(1e-12));
        for (int p = 1; p < 2 * n; ++p)
            CHECK(riesz_energy_closed(n, p) == doctest::Approx(riesz_energy(equidistributed(n), p)).epsilon(1e-10));
    }
    CHECK(equidistributed_energy(5, 2.5) == doctest::Approx(riesz_energy(equidistributed(5), 2.5)));
}

TEST_CASE("Stolarsky maxima against a dense grid") {
    for (int n = 2; n <= 6; ++n)
        for (double p : {0.5, 1.0, 2.0, 3.0, 4.5}) {
            const auto r = stolarsky_max(n, Exponent(p));
            const auto g = torus_grid_max(equidistributed(n), p, 20000);
            CHECK(r.stolarsky_max >= g.value - 1e-9);
            CHECK(r.stolarsky_max - g.value <= 1e-6 * r.stolarsky_max);
            CHECK_FALSE(r.branch.empty());
        }
}

TEST_CASE("equally spaced lines") {
    CHECK(prop5_value(3, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(prop5_value(2, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    for (int n = 2; n <= 6; ++n) {
        std::vector<double> lines;
        for (int k = 0; k < n; ++k) lines.push_back(M_PI * k / n);
        for (double p : {0.3, 0.7, 1.0}) CHECK(planar_polarization(lines, p) == doctest::Approx(prop5_value(n, p)).epsilon(1e-10));
        for (double p : {1.5, 3.0})
            CHECK(planar_polarization(lines, p) ==
                  doctest::Approx(stolarsky_max(n, Exponent(p)).stolarsky_max / std::pow(2.0, p)).epsilon(1e-10));
        CHECK(equidistribution_residual(PlanarConfig(lines)) <= 1e-12);
    }
    CHECK(equidistribution_residual(PlanarConfig({0.0, 0.1, 0.2})) > 0.1);
}

TEST_CASE("excluded exponents") {
    CHECK(conjecture2_excluded(3, 2.0));
    CHECK(conjecture2_excluded(3, 4.0));
    CHECK_FALSE(conjecture2_excluded(3, 6.0));
    CHECK_FALSE(conjecture2_excluded(3, 3.0));
    CHECK_FALSE(conjecture2_excluded(3, 1.0));
}

TEST_CASE("planar minimizer finds equally spaced lines") {
    const auto r = minimize_planar(3, Exponent(3.0), 4, 3);
    const double target = stolarsky_max(3, Exponent(3.0)).stolarsky_max / 8.0;
    CHECK(r.value >= target - 1e-9);
    CHECK(r.value == doctest::Approx(target).epsilon(1e-6));
    const auto again = minimize_planar(3, Exponent(3.0), 4, 3);
    CHECK(again.lines == r.lines);
}

TEST_CASE("scan skips excluded exponents") {
    const auto s = conjecture2_scan(3, {1.0, 2.0, 3.0}, 2, 1);
    CHECK(s.items.size() == 2);
    REQUIRE(s.excluded.size() == 1);
    CHECK(s.excluded[0].p == 2.0);
    for (const auto& item : s.items) CHECK(item.consistent);
}
