#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qmoment/jsonio.hpp"

using namespace qmoment;

TEST_CASE("field element encoding") {
    Sqrt2 x(Rational(-8), Rational(25, 2));
    json j = to_json(x);
    CHECK(j.at("a") == "-8");
    CHECK(j.at("b") == "25/2");
    CHECK(sqrt2_from_json(j) == x);
}

TEST_CASE("series round trip") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 48);
    for (int i = 0; i < 50; ++i) {
        Series s(10);
        for (int k = 0; k <= 10; ++k)
            s.set(k, Sqrt2(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
        json j = to_json(s);
        CHECK(j.at("order") == 10);
        CHECK(j.at("coeffs").size() == 11);
        CHECK(series_from_json(j) == s);
        // byte-identical re-serialization
        CHECK(to_json(series_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("malformed series are rejected") {
    json j{{"order", 3}, {"coeffs", json::array()}};
    CHECK_THROWS_AS(series_from_json(j), std::invalid_argument);
}
