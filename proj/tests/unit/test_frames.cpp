#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "polar/certify.hpp"
#include "polar/frames.hpp"

using namespace polar;

TEST_CASE("jacobi eigen on a known matrix") {
    const auto e = jacobi_eigen({2.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 5.0}, 3);
    REQUIRE(e.values.size() == 3);
    CHECK(e.values[0] == doctest::Approx(5.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
    CHECK(e.values[2] == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors[2]) == doctest::Approx(1.0));
    CHECK(e.off_diagonal <= 1e-12);
}

TEST_CASE("frame operator and p = 2 polarization") {
    const auto m = testing::mercedes();
    const auto a = frame_operator(m);
    CHECK(a.trace() == doctest::Approx(3.0));
    CHECK(a(0, 0) == doctest::Approx(1.5));
    CHECK(a(0, 1) == doctest::Approx(0.0).epsilon(1e-15));
    const auto p2 = polarization_p2(m);
    CHECK(p2.value == doctest::Approx(1.5).epsilon(1e-14));

    const auto c = Configuration::from_directions(2, {{1, 0}, {1, 1}});
    const auto q = polarization_p2(c);
    CHECK(q.value == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(q.witness[0] > 0.0);
    const double u = q.witness[0] * 1.0;
    const double w = (q.witness[0] + q.witness[1]) / std::sqrt(2.0);
    CHECK(u * u + w * w == doctest::Approx(q.value).epsilon(1e-13));
}

TEST_CASE("p = 2 polarization agrees with the certificate") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
        const auto c = random_configuration(6, 3, s);
        const auto cert = certified_max(c, Exponent(2), 1e-3);
        const double v = polarization_p2(c).value;
        CHECK(cert.lower <= v + 1e-12);
        CHECK(cert.upper >= v - 1e-12);
    }
}

TEST_CASE("frame potential lower bound n^2/d with equality for tight frames") {
    const auto m = testing::mercedes();
    CHECK(frame_potential(m) == doctest::Approx(4.5));
    CHECK(isotropy_residual(m) <= 1e-15);
    const auto c = random_configuration(5, 3, 9);
    CHECK(frame_potential(c) >= 25.0 / 3.0 - 1e-12);
    CHECK(isotropy_residual(c) > 1e-3);
}

TEST_CASE("complex moment checks") {
    const auto m = low_dim_isotropy_check(testing::mercedes());
    CHECK(m.is_isotropic);
    CHECK(m.moments_isotropic);
    REQUIRE(m.planar_moment);
    CHECK(std::abs(*m.planar_moment) <= 1e-14);

    const auto r = low_dim_isotropy_check(random_configuration(5, 2, 3));
    CHECK_FALSE(r.is_isotropic);
    CHECK_FALSE(r.moments_isotropic);

    const auto onb3 = low_dim_isotropy_check(Configuration::orthonormal_basis(3));
    CHECK(onb3.is_isotropic);
    CHECK(onb3.moments_isotropic);
    REQUIRE(onb3.disc_moments);

    const auto four = low_dim_isotropy_check(Configuration::orthonormal_basis(4));
    CHECK(four.is_isotropic);
    CHECK_FALSE(four.planar_moment);
    CHECK_FALSE(four.disc_moments);
}

TEST_CASE("UNTF synthesis") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{5, 3}, std::pair{7, 4}, std::pair{4, 4}}) {
        const auto r = synthesize_untf(n, d, 17);
        CHECK(r.frame.size() == static_cast<std::size_t>(n));
        CHECK(r.residual <= 1e-8);
        CHECK(r.potential == doctest::Approx(static_cast<double>(n) * n / d).epsilon(1e-9));
        CHECK(polarization_p2(r.frame).value == doctest::Approx(static_cast<double>(n) / d).epsilon(1e-8));
        const auto again = synthesize_untf(n, d, 17);
        CHECK(again.frame == r.frame);
    }
}
