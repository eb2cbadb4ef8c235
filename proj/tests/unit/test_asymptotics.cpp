#include <doctest.h>

#include <cmath>
#include <tuple>

#include "helpers.hpp"
#include "polar/asymptotics.hpp"
#include "polar/certify.hpp"
#include "polar/frames.hpp"
#include "polar/potential.hpp"

using namespace polar;

// Reference values computed with mpmath at 30 digits.
TEST_CASE("mu against high-precision values") {
    const std::vector<std::tuple<int, double, double>> table{
        std::tuple{2, 1.0, 0.63661977236758134308},
        std::tuple{3, 1.0, 0.5},
        std::tuple{3, 0.5, 0.66666666666666666667},
        std::tuple{5, 3.0, 0.125},
        std::tuple{10, 2.5, 0.067318767319617039826},
        std::tuple{100, 7.25, 2.5087787110379948981e-6},
        std::tuple{1000, 0.1, 0.66830075316043544722},
        std::tuple{1000000, 1.0, 0.00079788476027403049046},
        std::tuple{1000000, 0.3, 0.1091352724968674778476},
        std::tuple{7, 1000.0, 1.486586507642741925e-8},
        std::tuple{2, 0.001, 0.9993075036390374249},
        std::tuple{40, 40.0, 1.8189894035458564758e-12},
    };
    for (const auto& [d, p, expect] : table) {
        CAPTURE(d);
        CAPTURE(p);
        CHECK(mu(d, Exponent(p)) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(log_mu(1000000, 1000.0) == doctest::Approx(-3953.780566192077750341).epsilon(1e-13));
    CHECK(mu(1000000, Exponent(1000.0)) == 0.0);
    CHECK(mu(1, Exponent(3.7)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mu_tilde against high-precision values") {
    const std::vector<std::pair<double, double>> table{
        {0.5, 1.0787052023767587133}, {1.0, 1.2732395447351626862}, {2.5, 2.588892485704220912},
        {3.0, 3.3953054526271004964}, {7.3, 44.974881116617939734}, {49.5, 89831570011593.984785},
    };
    for (const auto& [p, expect] : table) CHECK(mu_tilde(Exponent(p)) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(mu_tilde(Exponent(2)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(mu_tilde(Exponent(4)) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("duplication: mu_tilde(p) = 2^p mu(2, p)") {
    for (int k = 1; k <= 100; ++k) {
        const double p = 0.5 * k;
        CHECK(mu_tilde(Exponent(p)) == doctest::Approx(std::pow(2.0, p) * mu(2, Exponent(p))).epsilon(1e-12));
    }
}

TEST_CASE("mu at p = 2 is 1/d") {
    for (int d = 1; d <= 50; ++d) CHECK(mu(d, Exponent(2)) == doctest::Approx(1.0 / d).epsilon(1e-13));
}

TEST_CASE("log_gamma_ratio matches lgamma where both are accurate") {
    for (double x : {0.5, 1.0, 3.7, 20.0})
        for (double a : {0.0, 0.25, 1.0, 5.5})
            CHECK(log_gamma_ratio(x, a) == doctest::Approx(std::lgamma(x + a) - std::lgamma(x)).epsilon(1e-12));
}

TEST_CASE("Monte Carlo mean of |<v,u>|^p within a Hoeffding band") {
    // Values lie in [0, 1]; P(|mean - mu| > t) <= 2 exp(-2 N t^2), and t below makes that 1e-9.
    const int N = 200000;
    const double t = std::sqrt(std::log(2.0 / 1e-9) / (2.0 * N));
    for (auto [d, p] : {std::pair{2, 1.0}, std::pair{3, 0.5}, std::pair{5, 3.0}, std::pair{8, 1.7}}) {
        CounterRng rng(42, static_cast<std::uint64_t>(d));
        double s = 0.0;
        for (int k = 0; k < N; ++k) s += std::pow(std::abs(random_unit_vector(rng, d)[0]), p);
        CHECK(std::abs(s / N - mu(d, Exponent(p))) <= t);
    }
}

// Max of sum_j c_j |v_j|^p by a brute grid in d = 2.
static double brute_weighted(int c0, int c1, double p) {
    double best = 0.0;
    for (int j = 0; j <= 400000; ++j) {
        const double t = 0.5 * M_PI * j / 400000;
        best = std::max(best, c0 * std::pow(std::cos(t), p) + c1 * std::pow(std::sin(t), p));
    }
    return best;
}

TEST_CASE("weighted coordinate max") {
    for (auto [c0, c1] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}})
        for (double p : {0.5, 1.0, 1.5, 2.0, 3.0})
            CHECK(weighted_coordinate_max({c0, c1}, p) == doctest::Approx(brute_weighted(c0, c1, p)).epsilon(1e-9));
    CHECK(weighted_coordinate_max({1, 1, 1, 1}, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("theorem bounds examples") {
    const auto r = theorem1_bounds(4, 2, Exponent(2));
    CHECK(r.lower == doctest::Approx(2.0));
    CHECK(r.upper == doctest::Approx(2.0));
    CHECK(r.copies == 2);
    CHECK(r.last_copy == 2);
    CHECK(r.truncation == "none");
    CHECK(r.c_bound == doctest::Approx(2.0));

    const auto s = theorem1_bounds(3, 3, Exponent(1));
    CHECK(s.lower == doctest::Approx(1.5));
    CHECK(s.upper == doctest::Approx(std::sqrt(3.0)));

    CHECK_THROWS_AS(theorem1_bounds(2, 3, Exponent(1)), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_bounds(1, 0, Exponent(1)), std::invalid_argument);
}

TEST_CASE("theorem bounds: truncated constructions against a certificate") {
    for (int d = 2; d <= 4; ++d)
        for (int n = d; n <= 3 * d; ++n)
            for (double p : {0.5, 1.0, 2.0, 3.0}) {
                const auto r = theorem1_bounds(n, d, Exponent(p));
                REQUIRE(r.construction.size() == static_cast<std::size_t>(n));
                CHECK(r.lower <= r.upper + 1e-12);
                CHECK(r.normalized_upper == doctest::Approx(r.upper / (n * std::pow(d, -p / 2.0))).epsilon(1e-12));
                // The optimum lies between n mu and 2^{p/2} n d^{-p/2}.
                CHECK(r.lower <= r.c_bound * n * std::pow(d, -p / 2.0) * (1.0 + 1e-12));
                const auto cert = certified_max(r.construction, Exponent(p), delta_for_modulus(n, p, 1e-8));
                CHECK(cert.lower <= r.upper + 1e-12);
                CHECK(cert.upper >= r.upper - 1e-12);
            }
}

TEST_CASE("doubling construction") {
    const auto base = testing::mercedes();
    const auto dbl = doubling_construction(base);
    CHECK(dbl.dim() == 4);
    CHECK(dbl.size() == 6);
    CHECK(polarization_p2(dbl).value == doctest::Approx(polarization_p2(base).value).epsilon(1e-12));
    // For p = 1 the doubled maximum gains exactly a factor sqrt(2).
    const auto a = certified_max(base, Exponent(1), 1e-5);
    const auto b = certified_max(dbl, Exponent(1), 2e-3);
    CHECK(b.upper >= std::sqrt(2.0) * a.lower - 1e-9);
    CHECK(b.lower <= std::sqrt(2.0) * a.upper + 1e-9);
}
