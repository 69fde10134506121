#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pnr/click_model.hpp"
#include "pnr/loop_detector.hpp"

using namespace pnr;

TEST_CASE("single pass, single photon: click probability is T * eta") {
    for (double T : {0.2, 0.5, 1.0}) {
        const LoopDetectorConfig config(T, 0.97, 1, ClickModel(0.9, 0.0));
        const ResponseMatrix r = loop_response(config, 1);
        CHECK(r.at(1, 1) == doctest::Approx(T * 0.9).epsilon(1e-13));
        const auto oracle = oracles::loop_one_pass_column(T, 0.9, 0.0, 1);
        CHECK(r.at(0, 1) == doctest::Approx(oracle[0]).epsilon(1e-13));
    }
}

TEST_CASE("single pass matches the unrolled recursion for several photon numbers") {
    const double T = 0.35, eta = 0.8, dark = 0.03;
    const LoopDetectorConfig config(T, 0.5, 1, ClickModel(eta, dark));
    const ResponseMatrix r = loop_response(config, 1);
    for (int m = 0; m <= 8; ++m) {
        const auto oracle = oracles::loop_one_pass_column(T, eta, dark, m);
        CHECK(r.at(0, m) == doctest::Approx(oracle[0]).epsilon(1e-12));
        CHECK(r.at(1, m) == doctest::Approx(oracle[1]).epsilon(1e-12));
    }
}

TEST_CASE("certain exit reduces to a single click detector") {
    const ClickModel click(0.75, 0.0);
    const LoopDetectorConfig config(1.0, 0.9, 6, click);
    const ResponseMatrix r = loop_response(config, 1);
    for (int m = 0; m <= r.m_max(); ++m) {
        CHECK(r.at(1, m) == doctest::Approx(click_probability(click, m)).epsilon(1e-12));
        CHECK(r.at(0, m) == doctest::Approx(1.0 - click_probability(click, m)).epsilon(1e-12));
    }
}

TEST_CASE("no photons and no dark counts: always silent") {
    const LoopDetectorConfig config(0.4, 0.95, 8, ClickModel(0.9, 0.0));
    const ResponseMatrix r = loop_response(config, 3);
    CHECK(r.at(0, 0) == 1.0);
    for (int k = 1; k <= 3; ++k) CHECK(r.at(k, 0) == 0.0);
}

TEST_CASE("columns are stochastic on a parameter grid") {
    for (double T : {0.1, 0.6, 1.0})
        for (double survival : {0.0, 0.8, 1.0})
            for (int l : {1, 3, 17}) {
                const LoopDetectorConfig config(T, survival, l, ClickModel(0.85, 0.02));
                const ResponseMatrix r = loop_response(config, std::min(4, l));
                CHECK(validate_response(r).max_column_sum_deviation <= 1e-9);
            }
}

TEST_CASE("without dark counts no more clicks than photons") {
    const LoopDetectorConfig config(0.3, 0.97, 10, ClickModel(0.95, 0.0));
    const ResponseMatrix r = loop_response(config, 6);
    for (int m = 0; m <= 5; ++m)
        for (int k = m + 1; k <= 6; ++k) CHECK(r.at(k, m) == 0.0);
}

TEST_CASE("more passes only help the exact-count entries") {
    for (int m : {1, 2, 3}) {
        double prev = -1.0;
        for (int l = 4; l <= 12; ++l) {
            const LoopDetectorConfig config(0.25, 0.96, l, ClickModel(0.9, 0.0));
            const ResponseMatrix r = loop_response(config, 4);
            CHECK(r.at(m, m) >= prev - 1e-12);
            prev = r.at(m, m);
        }
    }
}

TEST_CASE("absorbing row grows with the photon number") {
    const LoopDetectorConfig config(0.45, 0.9, 12, ClickModel(0.8, 0.01));
    const ResponseMatrix r = loop_response(config, 4);
    CHECK(r.tail_monotone_verified());
    for (int m = 1; m <= r.m_max(); ++m) CHECK(r.at(4, m) >= r.at(4, m - 1) - 1e-12);
}

TEST_CASE("loop_response rejects n above the pass budget") {
    CHECK_THROWS_AS(loop_response(LoopDetectorConfig(0.5, 0.9, 3, ClickModel(1.0, 0.0)), 4),
                    std::invalid_argument);
}

TEST_CASE("LoopDetectorConfig validates its parameters") {
    CHECK_THROWS_AS(LoopDetectorConfig(0.0, 0.9, 3, ClickModel(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LoopDetectorConfig(1.2, 0.9, 3, ClickModel(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LoopDetectorConfig(0.5, 1.01, 3, ClickModel(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LoopDetectorConfig(0.5, 0.9, 0, ClickModel(1.0, 0.0)),
                    std::invalid_argument);
}
