#include "pubsim/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pubsim {

namespace {

constexpr double kCutLo = 0.005;
constexpr double kCutHi = 0.995;

} // namespace

double standard_gumbel_quantile(GumbelSkew skew, double u) {
    if (skew == GumbelSkew::right_max) {
        return -std::log(-std::log(u));
    }
    return std::log(-std::log(1.0 - u));
}

BoundedGumbelSpec BoundedGumbelSpec::make(GumbelSkew skew, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("bounded gumbel: support_lo must be below support_hi");
    }
    BoundedGumbelSpec s;
    s.skew = skew;
    s.support_lo = lo;
    s.support_hi = hi;
    s.quantile_lo = standard_gumbel_quantile(skew, kCutLo);
    s.quantile_hi = standard_gumbel_quantile(skew, kCutHi);
    s.scale = (hi - lo) / (s.quantile_hi - s.quantile_lo);
    s.location = lo - s.scale * s.quantile_lo;
    if (!(s.scale > 0.0)) {
        throw std::invalid_argument("bounded gumbel: derived scale is not positive");
    }
    return s;
}

double bounded_gumbel_quantile(const BoundedGumbelSpec& spec, double u) {
    if (!(u >= kCutLo && u <= kCutHi)) {
        throw std::invalid_argument("bounded gumbel quantile: u outside [0.005, 0.995]");
    }
    return spec.location + spec.scale * standard_gumbel_quantile(spec.skew, u);
}

double bounded_gumbel_sample(Rng& rng, const BoundedGumbelSpec& spec) {
    if (!(spec.scale > 0.0) || !(spec.support_lo < spec.support_hi)) {
        throw std::invalid_argument("bounded gumbel sample: invalid spec");
    }
    const double u = kCutLo + (kCutHi - kCutLo) * rng.uniform01_open();
    double x = spec.location + spec.scale * standard_gumbel_quantile(spec.skew, u);
    // The affine map can round onto a boundary; keep the support open.
    if (x <= spec.support_lo) x = std::nextafter(spec.support_lo, spec.support_hi);
    if (x >= spec.support_hi) x = std::nextafter(spec.support_hi, spec.support_lo);
    return x;
}

TruncNormalSpec TruncNormalSpec::make(double mu, double sigma, double lo, double hi) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("truncated normal: sigma must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("truncated normal: lo must be below hi");
    }
    return TruncNormalSpec{mu, sigma, lo, hi};
}

double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("norm_quantile: p outside (0, 1)");
    }
    // Acklam's rational approximation, then two Halley refinements against
    // the erfc-based CDF; accurate to a few ulps over (0, 1).
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    for (int i = 0; i < 2; ++i) {
        const double e = norm_cdf(x) - p;
        const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double trunc_normal_cdf(const TruncNormalSpec& spec, double x) {
    if (x <= spec.lo) return 0.0;
    if (x >= spec.hi) return 1.0;
    const double lo_c = norm_cdf((spec.lo - spec.mu) / spec.sigma);
    const double hi_c = norm_cdf((spec.hi - spec.mu) / spec.sigma);
    const double xc = norm_cdf((x - spec.mu) / spec.sigma);
    return (xc - lo_c) / (hi_c - lo_c);
}

double trunc_normal_sample(Rng& rng, const TruncNormalSpec& spec) {
    if (!(spec.sigma > 0.0) || !(spec.lo < spec.hi)) {
        throw std::invalid_argument("truncated normal sample: invalid spec");
    }
    const double lo_c = norm_cdf((spec.lo - spec.mu) / spec.sigma);
    const double hi_c = norm_cdf((spec.hi - spec.mu) / spec.sigma);
    const double u = rng.uniform01_open();
    double x = spec.mu + spec.sigma * norm_quantile(lo_c + u * (hi_c - lo_c));
    if (x <= spec.lo) x = std::nextafter(spec.lo, spec.hi);
    if (x >= spec.hi) x = std::nextafter(spec.hi, spec.lo);
    return x;
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cont_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    const double kFpMin = std::numeric_limits<double>::min() / kEps;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("regularized_incomplete_beta: a, b must be positive");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("regularized_incomplete_beta: x outside [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cont_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_cont_fraction(b, a, 1.0 - x) / b;
}

} // namespace pubsim
