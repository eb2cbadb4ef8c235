#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "polar/asymptotics.hpp"
#include "polar/json_io.hpp"
#include "polar/search.hpp"

using namespace polar;

TEST_CASE("random configurations depend only on (seed, index)") {
    const auto a = random_configuration(5, 3, 7);
    const auto b = random_configuration(8, 3, 7);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::equal(a[i].begin(), a[i].end(), b[i].begin()));
    CHECK_FALSE(random_configuration(5, 3, 8) == a);
}

TEST_CASE("search encloses the known optimum for two lines") {
    SearchOptions opts;
    opts.restarts = 1;
    opts.outer_steps = 25;
    opts.net_delta = 1e-3;
    const auto r = minimize_polarization(2, 2, Exponent(2), opts);
    CHECK(r.certificate.upper >= 1.0 - 1e-12);
    CHECK(r.certificate.upper <= 1.0 + r.certificate.modulus + 1e-12);
    CHECK(r.lower_bound == doctest::Approx(1.0));
    CHECK(r.best.size() == 2);
}

TEST_CASE("search upper bound is never below the average") {
    SearchOptions opts;
    opts.restarts = 2;
    opts.outer_steps = 50;
    opts.seed = 3;
    for (auto [n, d, p] : {std::tuple{4, 3, 1.0}, std::tuple{5, 2, 3.0}}) {
        const auto r = minimize_polarization(n, d, Exponent(p), opts);
        CHECK(r.certificate.upper >= n * mu(d, Exponent(p)) - 1e-9);
        CHECK(r.gap >= -1e-9);
        CHECK(r.starts.size() >= 3);
        for (const auto& s : r.starts) CHECK(s.final_upper <= s.initial_upper + 1e-12);
    }
}

TEST_CASE("search is deterministic") {
    SearchOptions opts;
    opts.restarts = 2;
    opts.outer_steps = 30;
    opts.seed = 5;
    const auto a = minimize_polarization(5, 3, Exponent(1.5), opts);
    const auto b = minimize_polarization(5, 3, Exponent(1.5), opts);
    CHECK(canonical_dump(json(a)) == canonical_dump(json(b)));
}
