#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "polar/certify.hpp"
#include "polar/kernels.hpp"
#include "polar/potential.hpp"
#include "polar/sphere_net.hpp"

using namespace polar;

TEST_CASE("configurations validate unit norm") {
    CHECK_THROWS_AS(Configuration::from_rows(2, {{1.0, 0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration::from_rows(2, {{1.0, 0.0, 0.0}}), std::invalid_argument);
    CHECK_NOTHROW(Configuration::from_rows(2, {{1.0, 1e-13}}));
    CHECK_THROWS_AS(Configuration::from_directions(2, {{0.0, 0.0}}), std::invalid_argument);
    const auto c = Configuration::from_directions(2, {{3.0, 4.0}});
    CHECK(c[0][0] == doctest::Approx(0.6));
    CHECK(Configuration::orthonormal_basis(3).size() == 3);
    CHECK(Configuration::from_rows(3, {{1, 0, 0}}).underdetermined());
}

TEST_CASE("exponent must be positive and finite") {
    CHECK_THROWS_AS(Exponent{0.0}, std::invalid_argument);
    CHECK_THROWS_AS(Exponent{-1.0}, std::invalid_argument);
    CHECK_THROWS_AS(Exponent{INFINITY}, std::invalid_argument);
    CHECK_THROWS_AS(Exponent{NAN}, std::invalid_argument);
}

TEST_CASE("potential examples") {
    const auto onb = Configuration::orthonormal_basis(2);
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<double> diag{s, s};
    CHECK(potential(onb, diag, Exponent(2)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(potential(onb, diag, Exponent(1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(potential(testing::mercedes(), std::vector<double>{1.0, 0.0}, Exponent(2)) == doctest::Approx(1.5));
    CHECK_THROWS_AS(potential(onb, std::vector<double>{1.0, 1.0}, Exponent(2)), std::invalid_argument);
    CHECK_THROWS_AS(potential(onb, std::vector<double>{1.0, 0.0, 0.0}, Exponent(2)), std::invalid_argument);
}

TEST_CASE("potential is invariant under a common rotation") {
    const auto c = random_configuration(7, 4, 3);
    const auto q = testing::random_rotation(4, 5);
    const auto rc = transform(c, q);
    CounterRng rng(1, 1);
    for (int t = 0; t < 10; ++t) {
        const auto v = random_unit_vector(rng, 4);
        std::vector<double> qv(4, 0.0);
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) qv[r] += q[r * 4 + k] * v[k];
        CHECK(potential(rc, qv, Exponent(1.5)) == doctest::Approx(potential(c, v, Exponent(1.5))).epsilon(1e-12));
    }
}

TEST_CASE("sphere nets cover at the requested radius") {
    for (auto [d, delta] : {std::pair{1, 0.5}, std::pair{2, 0.05}, std::pair{3, 0.1}, std::pair{4, 0.3}}) {
        const auto net = sphere_net(d, delta);
        REQUIRE(net.size() > 0);
        CHECK(sphere_net_size(d, delta) == net.size());
        for (std::size_t i = 0; i < net.size(); ++i) CHECK(norm(net[i]) == doctest::Approx(1.0).epsilon(1e-12));
        // Random probes must find a net point within delta.
        CounterRng rng(7, d);
        double worst = 0.0;
        for (int t = 0; t < 300; ++t) {
            const auto v = random_unit_vector(rng, d);
            double best = 4.0;
            for (std::size_t i = 0; i < net.size(); ++i) {
                double s = 0.0;
                for (int k = 0; k < d; ++k) s += (v[k] - net[i][k]) * (v[k] - net[i][k]);
                best = std::min(best, std::sqrt(s));
            }
            worst = std::max(worst, best);
        }
        CHECK(worst <= delta);
    }
}

TEST_CASE("sphere net arguments and budget") {
    CHECK_THROWS_AS(sphere_net(0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(sphere_net(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_net(3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_net(6, 1e-3, NetKind::automatic, 1000), BudgetExceeded);
    CHECK(sphere_net_size(6, 1e-3, NetKind::automatic, 1000) == 1001);
    CHECK(net_kind_from_string(to_string(NetKind::cube)) == NetKind::cube);
}

TEST_CASE("continuity modulus and its inverse") {
    CHECK(continuity_modulus(4, 2.0, 1e-3) == doctest::Approx(8e-3));
    CHECK(continuity_modulus(4, 0.5, 1e-4) == doctest::Approx(4e-2));
    for (double p : {0.3, 1.0, 2.5})
        CHECK(continuity_modulus(9, p, delta_for_modulus(9, p, 1e-6)) == doctest::Approx(1e-6).epsilon(1e-12));
}

TEST_CASE("certified max on known configurations") {
    SUBCASE("orthonormal basis at p = 2 is identically one") {
        for (int d = 1; d <= 5; ++d) {
            const auto c = certified_max(Configuration::orthonormal_basis(d), Exponent(2), 1e-3);
            CHECK(c.lower <= 1.0 + 1e-12);
            CHECK(c.upper >= 1.0 - 1e-12);
            CHECK(c.lower == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("single vector") {
        const auto c = certified_max(testing::single({0.0, 0.6, 0.8}), Exponent(3), 1e-3);
        CHECK(c.lower == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.upper >= 1.0);
    }
    SUBCASE("orthonormal basis at p = 1 peaks at sqrt(d)") {
        for (int d = 2; d <= 4; ++d) {
            const auto c = certified_max(Configuration::orthonormal_basis(d), Exponent(1), 1e-3);
            CHECK(c.lower <= std::sqrt(d) + 1e-12);
            CHECK(c.upper >= std::sqrt(d) - 1e-12);
            CHECK(c.upper - c.lower <= c.modulus + 1e-12);
        }
    }
    SUBCASE("mercedes at p = 2") {
        const auto c = certified_max(testing::mercedes(), Exponent(2), 1e-4);
        CHECK(c.lower == doctest::Approx(1.5).epsilon(1e-12));
    }
}

TEST_CASE("certificate encloses a fine brute-force maximum on the circle") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto c = random_configuration(5, 2, seed);
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const double delta = 1e-3;
            const auto cert = certified_max(c, Exponent(p), delta);
            const double brute = testing::circle_grid_max(c, p, 200000);
            CHECK(cert.lower <= brute + 1e-9);
            CHECK(cert.upper >= brute - 1e-12);
            CHECK(cert.upper - cert.lower <= cert.modulus + 1e-12);
        }
    }
}

TEST_CASE("certificate is monotone in the configuration") {
    const auto c = random_configuration(6, 3, 11);
    auto bigger = c;
    const auto extra = random_configuration(1, 3, 12);
    bigger.append(extra[0]);
    const auto a = certified_max(c, Exponent(1.5), 1e-3);
    const auto b = certified_max(bigger, Exponent(1.5), 1e-3);
    CHECK(b.upper >= a.lower);
}

TEST_CASE("adaptive and flat certificates agree") {
    const auto c = random_configuration(6, 3, 21);
    const auto a = certified_max(c, Exponent(2.5), 2e-2);
    const auto f = certified_max_flat(c, Exponent(2.5), 2e-2);
    CHECK(a.lower <= f.upper);
    CHECK(f.lower <= a.upper);
}

TEST_CASE("flat certificate is the same serial and parallel") {
    const auto c = random_configuration(8, 3, 4);
    const auto s = certified_max_flat(c, Exponent(1.3), 2e-2, false);
    const auto p = certified_max_flat(c, Exponent(1.3), 2e-2, true);
    CHECK(s.lower == p.lower);
    CHECK(s.upper == p.upper);
    CHECK(s.witness == p.witness);
}

TEST_CASE("certified max budget") {
    CertifyOptions opts;
    opts.budget = 50;
    const auto c = certified_max(random_configuration(9, 5, 2), Exponent(0.5), 1e-6, opts);
    CHECK_FALSE(c.certified);
    CHECK(c.upper >= c.lower);
    CHECK_THROWS_AS(certified_max_flat(random_configuration(9, 6, 2), Exponent(2), 1e-3, true, 1000), BudgetExceeded);
}

TEST_CASE("local refine never loses") {
    const auto c = random_configuration(7, 3, 8);
    CounterRng rng(3, 3);
    for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const auto v0 = random_unit_vector(rng, 3);
        const auto r = local_refine(c, Exponent(p), v0);
        CHECK(r.value >= potential(c, v0, Exponent(p)) - 1e-15);
        CHECK(norm(r.direction) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // p = 2 fixed-point iteration is the power method: it reaches the top eigenvalue.
    const auto r = local_refine(testing::mercedes(), Exponent(2), std::vector<double>{0.6, 0.8});
    CHECK(r.value == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("serial and parallel kernels are bit-identical") {
    const auto c = random_configuration(13, 4, 5);
    const auto net = sphere_net(4, 0.2);
    for (double p : {0.7, 1.0, 2.0, 3.3}) {
        const auto a = kernels::serial::potential_argmax(c, p, net.points);
        const auto b = kernels::parallel::potential_argmax(c, p, net.points);
        CHECK(a.index == b.index);
        CHECK(a.value == b.value);
        CHECK(kernels::serial::potentials(c, p, net.points) == kernels::parallel::potentials(c, p, net.points));
    }
    const std::vector<double> angles{0.1, 1.7, 2.2, 4.0, 5.5};
    const auto s = kernels::serial::torus_grid_max(angles, 1.5, 5000);
    const auto t = kernels::parallel::torus_grid_max(angles, 1.5, 5000);
    CHECK(s.index == t.index);
    CHECK(s.value == t.value);
}

TEST_CASE("argmax ties go to the lowest index") {
    const std::vector<double> v{1.0, 3.0, 2.0, 3.0};
    CHECK(kernels::argmax(v).index == 1);
    CHECK(kernels::log_sum_exp(v, 1e6) == doctest::Approx(3.0 + std::log(2.0) / 1e6).epsilon(1e-14));
    const std::vector<double> w{0.0, 0.0};
    CHECK(kernels::log_sum_exp(w, 1.0) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("counter rng reproduces draws by key") {
    CounterRng a(5, 2), b(5, 2), c(5, 3);
    for (int k = 0; k < 10; ++k) {
        const auto x = a();
        CHECK(x == b());
        CHECK(x != c());
    }
    CounterRng u(1, 1);
    for (int k = 0; k < 1000; ++k) {
        const double x = u.uniform();
        CHECK((x >= 0.0 && x < 1.0));
    }
}
