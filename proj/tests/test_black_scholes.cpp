#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "divmeas/black_scholes.hpp"
#include "divmeas/errors.hpp"

using namespace divmeas;
using namespace divmeas::bs;

TEST_CASE("d1 hand values") {
    CHECK(d1(1.0, 1.0, MarketParams(0.0, 0.0, 0.2, 1.0)) ==
          doctest::Approx(0.1).epsilon(1e-14));
    CHECK(d1(100.0, 100.0, MarketParams(0.1, 0.0, 0.25, 1.0)) ==
          doctest::Approx(0.525).epsilon(1e-14));
    // deep in the money
    CHECK(d1(100.0, 1e-12, MarketParams(0.1, 0.0, 0.25, 1.0)) > 100.0);
    CHECK_THROWS_AS(d1(-1.0, 1.0, MarketParams(0.0, 0.0, 0.2, 1.0)), validation_error);
    CHECK_THROWS_AS(d1(1.0, 0.0, MarketParams(0.0, 0.0, 0.2, 1.0)), validation_error);
}

TEST_CASE("normal cdf accuracy against an erf-based reference") {
    for (double x = -8.0; x <= 8.0; x += 1.0 / 64) {
        const double ref = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
        CHECK(std::abs(norm_cdf(x) - ref) <= 1e-12);
    }
}

TEST_CASE("long put delta") {
    const MarketParams m(0.1, 0.0, 0.25, 1.0);
    CHECK(future_delta_long_put(100.0, 1e-10, m) == doctest::Approx(1.0));
    CHECK(future_delta_long_put(100.0, 100.0, m) ==
          doctest::Approx(0.7002084045313042).epsilon(1e-12));
    CHECK(future_delta_long_put(100.0, 1e10, m) == doctest::Approx(0.0).epsilon(1e-10));
    // far out of the money the delta is tiny but not flushed to zero
    CHECK(future_delta_long_put(100.0, 1e4, m) > 0.0);
}

TEST_CASE("long put delta is monotone in spot and strike") {
    const MarketParams m(0.05, 0.0, 0.3, 0.7);
    double prev = 0.0;
    for (double a = 20.0; a <= 300.0; a += 5.0) {
        const double cur = future_delta_long_put(a, 100.0, m);
        CHECK(cur > prev);
        prev = cur;
    }
    prev = 2.0;
    for (double e = 20.0; e <= 300.0; e += 5.0) {
        const double cur = future_delta_long_put(100.0, e, m);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("put spread delta") {
    const MarketParams m(0.1, 0.0, 0.25, 1.0);
    // collapsing spread leaves just the underlying
    CHECK(future_delta_put_spread(100.0, 100.0 + 1e-9, 100.0, m) ==
          doctest::Approx(1.0).epsilon(1e-9));
    // vanishing sold put reduces to the long put
    CHECK(std::abs(future_delta_put_spread(100.0, 100.0, 1e-6, m) -
                   future_delta_long_put(100.0, 100.0, m)) < 1e-10);
    const double expect = 1.0 + norm_cdf(0.525) -
                          norm_cdf((std::log(10.0 / 9.0) + 0.13125) / 0.25);
    CHECK(future_delta_put_spread(100.0, 100.0, 90.0, m) ==
          doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(future_delta_put_spread(100.0, 90.0, 100.0, m), validation_error);
}

TEST_CASE("collar delta") {
    const MarketParams m(0.1, 0.0, 0.25, 1.0);
    // worthless call leaves the long put
    CHECK(std::abs(future_delta_collar(100.0, 100.0, 1e10, m) -
                   future_delta_long_put(100.0, 100.0, m)) < 1e-10);
    // equal strikes remove all uncertainty
    for (double a : {10.0, 50.0, 100.0, 400.0})
        CHECK(future_delta_collar(a, 100.0, 100.0, m) == doctest::Approx(0.0));
    const double expect =
        norm_cdf(0.525) - norm_cdf((std::log(100.0 / 120.0) + 0.13125) / 0.25);
    CHECK(future_delta_collar(100.0, 100.0, 120.0, m) ==
          doctest::Approx(expect).epsilon(1e-13));
    // stays positive deep in the tails where naive CDF differences cancel
    CHECK(future_delta_collar(1e5, 100.0, 120.0, m) > 0.0);
    CHECK(future_delta_collar(1.0, 100.0, 120.0, m) > 0.0);
}

TEST_CASE("all future deltas stay in [0, 1] for zero yield") {
    const MarketParams m(0.08, 0.0, 0.35, 1.5);
    for (double a = 10.0; a <= 500.0; a += 7.0) {
        for (double e = 20.0; e <= 400.0; e += 37.0) {
            const double p = future_delta_long_put(a, e, m);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            const double s = future_delta_put_spread(a, e + 10.0, e, m);
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
            const double c = future_delta_collar(a, e, e + 25.0, m);
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
    }
}

TEST_CASE("market parameter validation") {
    CHECK_THROWS_AS(MarketParams(0.1, 0.0, 0.0, 1.0), validation_error);
    CHECK_THROWS_AS(MarketParams(0.1, 0.0, 0.2, 0.0), validation_error);
}
