#include "pubsim/planner.hpp"

#include "oracles.hpp"
#include "pubsim/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace pubsim;
using pubsim::oracles::GridPlan;
using pubsim::oracles::grid_plan;

TEST_SUITE_BEGIN("planner");

TEST_CASE("crra utility: unit payoff, log branch, direct evaluation") {
    CHECK(crra_utility(1.0, 0.5) == doctest::Approx(0.0));
    CHECK(crra_utility(1.0, 2.0) == doctest::Approx(0.0));
    // (2^-0.5 - 1)/(-0.5) evaluated with high-precision arithmetic.
    CHECK(crra_utility(2.0, 1.5) == doctest::Approx(0.5857864376269049).epsilon(1e-12));
    CHECK(crra_utility(std::exp(1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(crra_utility(0.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(crra_utility(-2.0, 1.5), std::domain_error);
}

TEST_CASE("one-shot optimum: limit at r=1, closed values, monotone in r") {
    CHECK(one_shot_optimum(1.0) == doctest::Approx(0.3679).epsilon(1e-3));
    CHECK(one_shot_optimum(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(one_shot_optimum(2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(one_shot_optimum(2.5) > one_shot_optimum(1.5));
    // Cross-check r=2 against the grid maximizer of the one-shot objective.
    const GridPlan g = grid_plan(2.0, 0.9, 2, 1e-5);
    CHECK(std::fabs(one_shot_optimum(2.0) - g.probs[0]) < 2e-5);
}

TEST_CASE("one-shot optimum is continuous through the r=1 branch switch") {
    const double at_limit = one_shot_optimum(1.0);
    CHECK(std::fabs(one_shot_optimum(1.0 + 1e-7) - at_limit) < 1e-6);
    CHECK(std::fabs(one_shot_optimum(1.0 - 1e-7) - at_limit) < 1e-6);
}

TEST_CASE("optimal plan: single period is the sure submission") {
    const SubmissionPlan plan = optimal_plan(PlannerParams{1.7, 0.8, 1});
    REQUIRE(plan.probs.size() == 1);
    CHECK(plan.probs[0] == 1.0);
    CHECK(plan.values[0] == 0.0);
}

TEST_CASE("optimal plan: r=2, beta=0.9, n=3 closed-form values") {
    const SubmissionPlan plan = optimal_plan(PlannerParams{2.0, 0.9, 3});
    REQUIRE(plan.probs.size() == 3);
    CHECK(plan.probs[0] == doctest::Approx(0.3875).epsilon(1e-12));
    CHECK(plan.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(plan.probs[2] == 1.0);
    CHECK(plan.values[2] == 0.0);
    CHECK(plan.values[1] == doctest::Approx(0.25).epsilon(1e-12));
    // U1 = p1*u(1/p1) + (1-p1)*beta*U2 with u(1/p) = 1-p at r=2.
    CHECK(plan.values[0] ==
          doctest::Approx(0.3875 * 0.6125 + 0.6125 * 0.9 * 0.25).epsilon(1e-12));
    CHECK_FALSE(plan.foc_clamped);
}

TEST_CASE("optimal plan: zero discount repeats the one-shot optimum") {
    const SubmissionPlan plan = optimal_plan(PlannerParams{1.5, 0.0, 4});
    REQUIRE(plan.probs.size() == 4);
    for (int i = 0; i < 3; ++i) {
        CHECK(plan.probs[i] == doctest::Approx(one_shot_optimum(1.5)).epsilon(1e-12));
    }
    CHECK(plan.probs[3] == 1.0);
}

TEST_CASE("optimal plan matches the nested grid-search oracle") {
    Rng rng(2024, RngStream::scheduler);
    for (int trial = 0; trial < 50; ++trial) {
        const double r = 1.1 + 1.9 * rng.uniform01_open();
        const double beta = 0.5 + 0.5 * rng.uniform01_open();
        const int n = 2 + static_cast<int>(rng.uniform_below(3));
        const SubmissionPlan plan = optimal_plan(PlannerParams{r, beta, n});
        const GridPlan oracle = grid_plan(r, beta, n);
        for (int i = 0; i < n; ++i) {
            CHECK(std::fabs(plan.probs[i] - oracle.probs[i]) < 1e-3);
        }
    }
}

TEST_CASE("optimal plan: probabilities increase toward the terminal period") {
    for (const double r : {1.2, 1.5, 2.0, 3.0}) {
        for (const double beta : {0.7, 0.9, 1.0}) {
            const SubmissionPlan plan = optimal_plan(PlannerParams{r, beta, 8});
            CHECK(plan.probs.back() == 1.0);
            for (std::size_t i = 0; i + 1 < plan.probs.size(); ++i) {
                CHECK(plan.probs[i] < plan.probs[i + 1]);
                CHECK(plan.probs[i] > 0.0);
            }
        }
    }
}

TEST_CASE("optimal plan: log branch handled at r near 1") {
    const SubmissionPlan plan = optimal_plan(PlannerParams{1.0, 0.9, 3});
    CHECK(plan.probs[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
    const GridPlan oracle = grid_plan(1.0, 0.9, 3);
    CHECK(std::fabs(plan.probs[0] - oracle.probs[0]) < 1e-3);
}

TEST_CASE("horizon diagnostic") {
    const SubmissionPlan plan3 = optimal_plan(PlannerParams{2.0, 0.9, 3});
    const auto flags3 = horizon_diagnostic(plan3, 0.9);
    REQUIRE(flags3.size() == 2);
    CHECK_FALSE(flags3[0]);
    CHECK_FALSE(flags3[1]);

    const SubmissionPlan plan1 = optimal_plan(PlannerParams{2.0, 0.9, 1});
    CHECK(horizon_diagnostic(plan1, 0.9).empty());

    const SubmissionPlan plan5 = optimal_plan(PlannerParams{2.0, 1.0, 5});
    for (const bool hurts : horizon_diagnostic(plan5, 1.0)) {
        CHECK_FALSE(hurts);
    }
}

TEST_CASE("planner parameter validation") {
    CHECK_THROWS_AS(optimal_plan(PlannerParams{0.0, 0.9, 3}), std::invalid_argument);
    CHECK_THROWS_AS(optimal_plan(PlannerParams{1.5, -0.1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(optimal_plan(PlannerParams{1.5, 1.1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(optimal_plan(PlannerParams{1.5, 0.9, 0}), std::invalid_argument);
}

TEST_SUITE_END();
