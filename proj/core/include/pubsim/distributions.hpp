#pragma once

#include "pubsim/rng.hpp"

namespace pubsim {

enum class GumbelSkew {
    right_max, ///< maximum case, long right tail
    left_min,  ///< minimum case, long left tail
};

/// Gumbel distribution renormalised between its 0.5% and 99.5% quantiles and
/// affinely mapped onto a finite support. Samples are drawn by restricting
/// the uniform draw to (0.005, 0.995) before inversion, which is exactly the
/// renormalised density and needs no rejection loop.
struct BoundedGumbelSpec {
    GumbelSkew skew = GumbelSkew::right_max;
    double support_lo = 0.0;
    double support_hi = 1.0;
    // Derived: standard quantiles at the cut points and the affine map.
    double quantile_lo = 0.0; // a = Q(0.005)
    double quantile_hi = 0.0; // b = Q(0.995)
    double scale = 0.0;       // (support_hi - support_lo) / (b - a), > 0
    double location = 0.0;    // support_lo - scale * a

    static BoundedGumbelSpec make(GumbelSkew skew, double lo, double hi);
};

/// Quantile of the standard (location 0, scale 1) Gumbel of the given skew.
double standard_gumbel_quantile(GumbelSkew skew, double u);

/// Bounded-Gumbel quantile; u must lie in [0.005, 0.995]. The endpoints map
/// exactly onto the support boundaries.
double bounded_gumbel_quantile(const BoundedGumbelSpec& spec, double u);

/// Draw from the bounded Gumbel; result lies strictly inside the support.
double bounded_gumbel_sample(Rng& rng, const BoundedGumbelSpec& spec);

/// Normal distribution truncated to (lo, hi).
struct TruncNormalSpec {
    double mu = 0.0;
    double sigma = 1.0;
    double lo = 0.0;
    double hi = 1.0;

    static TruncNormalSpec make(double mu, double sigma, double lo, double hi);
};

/// Inverse-CDF draw; result lies strictly inside (lo, hi).
double trunc_normal_sample(Rng& rng, const TruncNormalSpec& spec);

/// CDF of the truncated normal (exposed for diagnostics and tests).
double trunc_normal_cdf(const TruncNormalSpec& spec, double x);

/// Standard normal CDF and quantile.
double norm_cdf(double z);
double norm_quantile(double p);

/// Regularized incomplete beta function I_x(a, b), the CDF of Beta(a, b).
/// Continued-fraction evaluation, absolute error below 1e-10 over the
/// parameter ranges used here. Throws std::domain_error on bad input.
double regularized_incomplete_beta(double x, double a, double b);

} // namespace pubsim
