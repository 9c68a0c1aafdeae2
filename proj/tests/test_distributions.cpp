#include "pubsim/distributions.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

using namespace pubsim;

namespace {

// Simpson quadrature, used as the independent oracle for density integrals.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

double trunc_normal_pdf(double x, double mu, double sigma, double lo, double hi) {
    const double z = (x - mu) / sigma;
    const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
    const double mass = norm_cdf((hi - mu) / sigma) - norm_cdf((lo - mu) / sigma);
    return phi / (sigma * mass);
}

} // namespace

TEST_SUITE_BEGIN("distributions");

TEST_CASE("bounded gumbel quantile maps the cut points onto the support") {
    const auto right = BoundedGumbelSpec::make(GumbelSkew::right_max, 0.0, 1.0);
    CHECK(bounded_gumbel_quantile(right, 0.005) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bounded_gumbel_quantile(right, 0.995) == doctest::Approx(1.0).epsilon(1e-12));
    const auto left = BoundedGumbelSpec::make(GumbelSkew::left_min, 60.0, 500.0);
    CHECK(bounded_gumbel_quantile(left, 0.005) == doctest::Approx(60.0).epsilon(1e-12));
    CHECK(bounded_gumbel_quantile(left, 0.995) == doctest::Approx(500.0).epsilon(1e-12));
    CHECK(right.scale > 0.0);
    CHECK(left.scale > 0.0);
}

TEST_CASE("bounded gumbel rejects inverted supports") {
    CHECK_THROWS_AS(BoundedGumbelSpec::make(GumbelSkew::right_max, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(BoundedGumbelSpec::make(GumbelSkew::right_max, 0.5, 0.5),
                    std::invalid_argument);
}

TEST_CASE("right-skew bounded gumbel on (0,1): sample mean near 0.3199") {
    const auto spec = BoundedGumbelSpec::make(GumbelSkew::right_max, 0.0, 1.0);
    Rng rng(20240601, RngStream::agent_creation);
    double sum = 0.0;
    constexpr int kDraws = 1000000;
    for (int i = 0; i < kDraws; ++i) {
        const double x = bounded_gumbel_sample(rng, spec);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        sum += x;
    }
    CHECK(std::fabs(sum / kDraws - 0.3199) < 0.005);
}

TEST_CASE("right-skew mean agrees with a quadrature oracle") {
    const auto spec = BoundedGumbelSpec::make(GumbelSkew::right_max, 0.0, 1.0);
    // E[X] = integral over u in (0.005, 0.995) of Q(u) du / 0.99.
    const auto integrand = [&](double u) { return bounded_gumbel_quantile(spec, u); };
    const double mean = simpson(integrand, 0.005, 0.995, 20000) / 0.99;
    CHECK(mean == doctest::Approx(0.3199).epsilon(5e-4));
}

TEST_CASE("left-skew bounded gumbel on (60,500): ceiling mean near 360 days") {
    const auto spec = BoundedGumbelSpec::make(GumbelSkew::left_min, 60.0, 500.0);
    Rng rng(99, RngStream::agent_creation);
    double sum = 0.0;
    constexpr int kDraws = 1000000;
    for (int i = 0; i < kDraws; ++i) {
        const double x = bounded_gumbel_sample(rng, spec);
        CHECK(x > 60.0);
        CHECK(x < 500.0);
        sum += std::ceil(x);
    }
    CHECK(std::fabs(sum / kDraws - 360.0) < 2.0);
}

TEST_CASE("truncated normal: symmetric truncation keeps the mean") {
    const auto spec = TruncNormalSpec::make(0.5, 0.1, 0.0, 1.0);
    Rng rng(5, RngStream::paper_quality);
    double sum = 0.0;
    constexpr int kDraws = 1000000;
    for (int i = 0; i < kDraws; ++i) {
        const double x = trunc_normal_sample(rng, spec);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        sum += x;
    }
    CHECK(std::fabs(sum / kDraws - 0.5) < 0.002);
}

TEST_CASE("truncated normal empirical CDF matches the quadrature oracle") {
    const auto spec = TruncNormalSpec::make(0.5, 0.2, 0.0, 1.0);
    Rng rng(17, RngStream::review_noise);
    constexpr int kDraws = 200000;
    int below = 0;
    for (int i = 0; i < kDraws; ++i) {
        if (trunc_normal_sample(rng, spec) <= 0.6) ++below;
    }
    const double oracle = simpson([&](double x) { return trunc_normal_pdf(x, 0.5, 0.2, 0.0, 1.0); },
                                  0.0, 0.6, 6000);
    CHECK(std::fabs(static_cast<double>(below) / kDraws - oracle) < 0.005);
    // The closed-form CDF must agree with the quadrature to high accuracy.
    CHECK(trunc_normal_cdf(spec, 0.6) == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("truncated normal rejects invalid specs") {
    CHECK_THROWS_AS(TruncNormalSpec::make(0.5, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TruncNormalSpec::make(0.5, -1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TruncNormalSpec::make(0.5, 0.1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("norm_quantile inverts norm_cdf") {
    for (const double p : {1e-10, 1e-6, 0.0011, 0.2, 0.5, 0.77, 0.9989, 1.0 - 1e-6}) {
        CHECK(norm_cdf(norm_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(norm_quantile(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("regularized incomplete beta: bounds and closed forms") {
    CHECK(regularized_incomplete_beta(0.0, 2.3, 4.5) == 0.0);
    CHECK(regularized_incomplete_beta(1.0, 2.3, 4.5) == 1.0);
    // Symmetric Beta(1.5, 1.5) has median 0.5.
    CHECK(regularized_incomplete_beta(0.5, 1.5, 1.5) == doctest::Approx(0.5).epsilon(1e-12));
    // Beta(2, 1) CDF is x^2.
    CHECK(regularized_incomplete_beta(0.5, 2.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
    for (int i = 1; i <= 9; ++i) {
        const double x = i / 10.0;
        CHECK(std::fabs(regularized_incomplete_beta(x, 2.0, 1.0) - x * x) < 1e-10);
    }
}

TEST_CASE("regularized incomplete beta: symmetry and monotonicity") {
    Rng rng(31, RngStream::journal_perception);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform01_open();
        const double a = 0.2 + 3.0 * rng.uniform01_open();
        const double b = 0.2 + 3.0 * rng.uniform01_open();
        const double lhs = regularized_incomplete_beta(x, a, b);
        const double rhs = regularized_incomplete_beta(1.0 - x, b, a);
        CHECK(std::fabs(lhs + rhs - 1.0) < 1e-9);
    }
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double v = regularized_incomplete_beta(i / 200.0, 1.32, 1.68);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("regularized incomplete beta rejects out-of-range input") {
    CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 1.0, -2.0), std::domain_error);
}

TEST_CASE("samplers are deterministic per (seed, stream)") {
    const auto gspec = BoundedGumbelSpec::make(GumbelSkew::right_max, 0.0, 1.0);
    const auto tspec = TruncNormalSpec::make(0.3, 0.05, 0.0, 1.0);
    Rng a(77, RngStream::agent_creation), b(77, RngStream::agent_creation);
    for (int i = 0; i < 1000; ++i) {
        CHECK(bounded_gumbel_sample(a, gspec) == bounded_gumbel_sample(b, gspec));
    }
    Rng c(77, RngStream::paper_quality), d(77, RngStream::paper_quality);
    for (int i = 0; i < 1000; ++i) {
        CHECK(trunc_normal_sample(c, tspec) == trunc_normal_sample(d, tspec));
    }
}

TEST_SUITE_END();
