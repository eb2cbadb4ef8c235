#include <doctest.h>

#include "helpers.hpp"
#include "polar/json_io.hpp"

using namespace polar;

TEST_CASE("configuration round trip") {
    const auto c = random_configuration(6, 4, 2);
    const json j = c;
    CHECK(j.at("dim") == 4);
    const auto back = json::parse(j.dump()).get<Configuration>();
    CHECK(back == c);
}

TEST_CASE("malformed configuration JSON") {
    CHECK_THROWS_AS(json::parse(R"({"vectors": [[1, 0]]})").get<Configuration>(), std::invalid_argument);
    CHECK_THROWS_AS(json::parse(R"({"dim": 2, "vectors": [[1, 1]]})").get<Configuration>(), std::invalid_argument);
    CHECK_THROWS_AS(read_configuration("/nonexistent/config.json"), std::invalid_argument);
}

TEST_CASE("reports serialize") {
    const json m = max_sign_sum_exact(testing::mercedes());
    CHECK(m.at("status") == "exact");
    CHECK(m.at("signs").size() == 3);
    const json b = theorem1_bounds(5, 2, Exponent(1));
    CHECK(b.at("construction").at("vectors").size() == 5);
    const json s = stolarsky_max(4, Exponent(2.0));
    CHECK(s.at("closed").is_number());
    const json t = stolarsky_max(4, Exponent(2.5));
    CHECK(t.at("closed").is_null());
}

TEST_CASE("FNV-1a digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
