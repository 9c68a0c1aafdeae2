#include "pubsim/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace pubsim;

TEST_SUITE_BEGIN("rng");

TEST_CASE("identical seed and stream give bitwise-identical sequences") {
    Rng a(12345, RngStream::paper_quality);
    Rng b(12345, RngStream::paper_quality);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(12345, RngStream::paper_quality);
    Rng d(12345, RngStream::paper_quality);
    for (int i = 0; i < 1000; ++i) {
        CHECK(c.uniform01_open() == d.uniform01_open());
    }
}

TEST_CASE("distinct streams diverge") {
    Rng a(12345, RngStream::paper_quality);
    Rng b(12345, RngStream::review_noise);
    int equal = 0;
    for (int i = 0; i < 64; ++i) {
        if (a.next_u64() == b.next_u64()) ++equal;
    }
    CHECK(equal == 0);
}

TEST_CASE("distinct seeds diverge") {
    Rng a(1, RngStream::scheduler);
    Rng b(2, RngStream::scheduler);
    int equal = 0;
    for (int i = 0; i < 64; ++i) {
        if (a.next_u64() == b.next_u64()) ++equal;
    }
    CHECK(equal == 0);
}

TEST_CASE("uniform01_open stays strictly inside (0,1)") {
    Rng rng(7, RngStream::scheduler);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01_open();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniform_below covers the whole range without bias artifacts") {
    Rng rng(11, RngStream::reviewer_selection);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        ++counts[rng.uniform_below(7)];
    }
    for (const int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("shuffle produces a permutation and is seed-deterministic") {
    std::vector<int> v(100);
    std::iota(v.begin(), v.end(), 0);
    auto w = v;
    Rng a(3, RngStream::scheduler);
    Rng b(3, RngStream::scheduler);
    a.shuffle(v);
    b.shuffle(w);
    CHECK(v == w);
    std::set<int> seen(v.begin(), v.end());
    CHECK(seen.size() == 100);
}

TEST_SUITE_END();
