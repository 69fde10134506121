#include <doctest.h>

#include <cmath>

#include "pnr/solvers.hpp"

using namespace pnr;

namespace {

DetectorConfig spatial(int M, double eta, double dark = 0.0) {
    return SpatialArrayConfig(M, ClickModel(eta, dark));
}

} // namespace

TEST_CASE("eta_threshold on a detector whose quality equals its efficiency") {
    // single click detector, dark-free: Q_1 = eta
    const auto r = eta_threshold(spatial(1, 1.0), 1, 0.5, AllDistributions{}, 1e-4);
    CHECK(std::abs(r.threshold - 0.5) <= 1e-4);
    CHECK(r.bracket_hi - r.bracket_lo <= 1e-4);
    CHECK_FALSE(r.used_grid_fallback);
    CHECK(r.evaluations > 11);
}

TEST_CASE("eta_threshold satisfies its own bracketing invariant") {
    const double tol = 1e-3;
    const auto r = eta_threshold(spatial(8, 1.0), 3, 0.5, AllDistributions{}, tol);
    const double q_at = evaluate_quality(with_eta(spatial(8, 1.0), r.threshold), 3,
                                         AllDistributions{})
                            .value;
    const double q_below = evaluate_quality(with_eta(spatial(8, 1.0), r.threshold - tol), 3,
                                            AllDistributions{})
                               .value;
    CHECK(q_at >= 0.5);
    CHECK(q_below < 0.5);
    // the paper-scale answer: close to 0.92
    CHECK(r.threshold == doctest::Approx(0.92).epsilon(0.015));
}

TEST_CASE("eta_threshold reports no solution when even unit efficiency fails") {
    CHECK_THROWS_AS(eta_threshold(spatial(2, 1.0), 2, 0.9, AllDistributions{}),
                    NoSolutionError);
}

TEST_CASE("eta_threshold at a trivially reachable target") {
    // q = 0 is reached already at eta = 0
    const auto r = eta_threshold(spatial(4, 1.0), 1, 0.0, AllDistributions{});
    CHECK(r.threshold == 0.0);
}

TEST_CASE("approx_min_elements evaluates the leading term") {
    CHECK(approx_min_elements(10, 1.0, 0.5) == doctest::Approx(72.13).epsilon(1e-3));
    CHECK(approx_min_elements(5, 1.0, 0.5) == doctest::Approx(18.03).epsilon(1e-3));
    CHECK_THROWS_AS(approx_min_elements(10, 0.9, 0.5), NoSolutionError); // 0.9^10 < 0.5
}

TEST_CASE("min_elements small cases") {
    CHECK(min_elements(1, 1.0, 0.5, AllDistributions{}) == 1);
    CHECK(min_elements(3, 1.0, 0.5, AllDistributions{}) == 6);
    // M = 5 stays below: P[3][3] = 60/125 = 0.48
    const auto q5 = evaluate_quality(spatial(5, 1.0), 3, AllDistributions{});
    CHECK(q5.value == doctest::Approx(0.48).epsilon(1e-12));
    const auto q6 = evaluate_quality(spatial(6, 1.0), 3, AllDistributions{});
    CHECK(q6.value == doctest::Approx(120.0 / 216.0).epsilon(1e-12));
}

TEST_CASE("min_elements honours the feasibility bound") {
    CHECK_THROWS_AS(min_elements(10, 0.9, 0.5, AllDistributions{}), NoSolutionError);
    CHECK_THROWS_AS(min_elements(4, 0.8, 0.5, AllDistributions{}), NoSolutionError);
}

TEST_CASE("min_elements grows with the resolved photon number") {
    int prev = 0;
    for (int n = 1; n <= 6; ++n) {
        const int m = min_elements(n, 1.0, 0.5, AllDistributions{});
        CHECK(m >= prev);
        prev = m;
    }
}

TEST_CASE("dark_sweep tabulates in grid-major order and matches point evaluations") {
    const SweepGrid grid("dark_prob", {0.0, 0.01, 0.02});
    const std::vector<int> ns = {1, 2};
    const auto table = dark_sweep(spatial(4, 0.9), ns, grid, AllDistributions{});
    REQUIRE(table.size() == 6);
    for (size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].dark_prob == grid.values[i / 2]);
        CHECK(table[i].n == ns[i % 2]);
        const auto direct = evaluate_quality(with_dark_prob(spatial(4, 0.9), table[i].dark_prob),
                                             table[i].n, AllDistributions{});
        CHECK(table[i].quality.value == doctest::Approx(direct.value).epsilon(1e-15));
    }
    // dark-free column equals the dark-free evaluation exactly
    CHECK(table[0].quality.value ==
          evaluate_quality(spatial(4, 0.9), 1, AllDistributions{}).value);
}

TEST_CASE("dark_sweep validates the grid") {
    CHECK_THROWS_AS(SweepGrid("dark_prob", {0.1, 0.1}), std::invalid_argument);
    const SweepGrid bad("dark_prob", {0.5, 1.5});
    CHECK_THROWS_AS(dark_sweep(spatial(2, 0.9), {1}, bad, AllDistributions{}),
                    std::invalid_argument);
}

TEST_CASE("max_resolvable on the 8-element ideal array") {
    CHECK(max_resolvable(spatial(8, 1.0), AllDistributions{}, 0.5) == 3);
    CHECK(max_resolvable(spatial(8, 1.0), PoissonFamily{}, 0.5) == 5);
}

TEST_CASE("max_resolvable is consistent with the quality it reports") {
    const DetectorConfig config = spatial(6, 0.95, 0.002);
    const int n_star = max_resolvable(config, AllDistributions{}, 0.5);
    REQUIRE(n_star >= 1);
    CHECK(evaluate_quality(config, n_star, AllDistributions{}).value >= 0.5);
    CHECK(evaluate_quality(config, n_star + 1, AllDistributions{}).value < 0.5);
}

TEST_CASE("max_resolvable returns 0 when even one photon cannot be resolved") {
    CHECK(max_resolvable(spatial(4, 0.3), AllDistributions{}, 0.5) == 0);
}
