#include "pubsim/matching.hpp"

#include "oracles.hpp"
#include "pubsim/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

using namespace pubsim;
using namespace pubsim::oracles;

TEST_SUITE_BEGIN("matching");

TEST_CASE("single paper, single journal") {
    MatchingInstance inst;
    inst.papers.push_back({1, {10}});
    inst.journals.push_back({10, 1, {1}});
    const auto result = solve_journal_optimal(inst);
    REQUIRE(result.assignment.size() == 1);
    CHECK(result.assignment.at(1) == 10);
    CHECK(check_stability(inst, result).empty());
}

TEST_CASE("three scored papers, two ranked journals plus a sink") {
    // Papers scored 0.9 > 0.5 > 0.1; all journals agree on that order; every
    // paper prefers hi > lo > sink. Enumeration shows the assortative
    // matching is the unique stable one.
    MatchingInstance inst;
    for (int p = 0; p < 3; ++p) inst.papers.push_back({p, {20, 21, 22}});
    const std::vector<int> ranking{0, 1, 2};
    inst.journals.push_back({20, 1, ranking}); // hi
    inst.journals.push_back({21, 1, ranking}); // lo
    inst.journals.push_back({22, 1, ranking}); // sink
    const auto result = solve_journal_optimal(inst);
    CHECK(result.assignment.at(0) == 20);
    CHECK(result.assignment.at(1) == 21);
    CHECK(result.assignment.at(2) == 22);
    CHECK(check_stability(inst, result).empty());

    const Dense d = rank_tables(inst);
    const auto stable = all_stable_matchings(inst, d);
    REQUIRE(stable.size() == 1);
    CHECK(stable[0] == dense_assignment(inst, result));

    // Swapping two assignments manufactures a blocking pair.
    MatchingResult swapped;
    swapped.assignment = {{0, 21}, {1, 20}, {2, 22}};
    const auto blocking = check_stability(inst, swapped);
    REQUIRE_FALSE(blocking.empty());
    CHECK(std::find(blocking.begin(), blocking.end(), BlockingPair{0, 20}) != blocking.end());
}

TEST_CASE("empty instance is trivially stable") {
    MatchingInstance inst;
    const auto result = solve_journal_optimal(inst);
    CHECK(result.assignment.empty());
    CHECK(check_stability(inst, result).empty());
}

TEST_CASE("validation rejects malformed instances") {
    MatchingInstance dup_pref;
    dup_pref.papers.push_back({1, {10, 10}});
    dup_pref.journals.push_back({10, 1, {1}});
    CHECK_THROWS_AS(solve_journal_optimal(dup_pref), std::invalid_argument);

    MatchingInstance unknown_id;
    unknown_id.papers.push_back({1, {99}});
    unknown_id.journals.push_back({10, 1, {1}});
    CHECK_THROWS_AS(solve_journal_optimal(unknown_id), std::invalid_argument);

    MatchingInstance neg_cap;
    neg_cap.papers.push_back({1, {10}});
    neg_cap.journals.push_back({10, -1, {1}});
    CHECK_THROWS_AS(validate_instance(neg_cap), std::invalid_argument);

    MatchingInstance dup_paper;
    dup_paper.papers.push_back({1, {}});
    dup_paper.papers.push_back({1, {}});
    CHECK_THROWS_AS(validate_instance(dup_paper), std::invalid_argument);
}

TEST_CASE("random instances: stable, capacity-respecting, journal-optimal") {
    Rng rng(4242, RngStream::scheduler);
    for (int trial = 0; trial < 60; ++trial) {
        const MatchingInstance inst = random_instance(rng);
        const auto result = solve_journal_optimal(inst);

        // capacities
        std::map<int, int> count;
        for (const auto& [p, j] : result.assignment) ++count[j];
        for (const auto& j : inst.journals) {
            CHECK(count[j.id] <= j.capacity);
        }

        // stability via the library checker and the independent predicate
        CHECK(check_stability(inst, result).empty());
        const Dense d = rank_tables(inst);
        const auto assignment = dense_assignment(inst, result);
        CHECK(stable_by_definition(inst, d, assignment));

        // journal-optimality against every enumerated stable matching
        const auto stable = all_stable_matchings(inst, d);
        CHECK(std::find(stable.begin(), stable.end(), assignment) != stable.end());
        for (const auto& other : stable) {
            CHECK(journal_weakly_dominates(d, inst, assignment, other));
        }

        // determinism
        const auto again = solve_journal_optimal(inst);
        CHECK(again.assignment == result.assignment);
    }
}

TEST_CASE("identical journal preferences reduce to serial dictatorship") {
    Rng rng(777, RngStream::scheduler);
    for (int trial = 0; trial < 40; ++trial) {
        const MatchingInstance inst = identical_prefs_instance(rng);
        const auto result = solve_journal_optimal(inst);
        CHECK(check_stability(inst, result).empty());
        const auto expected = serial_dictatorship(inst, inst.journals[0].prefs);
        CHECK(result.assignment == expected);
    }
}

TEST_SUITE_END();
