#include "pubsim/planner.hpp"

#include <cmath>
#include <stdexcept>

namespace pubsim {

namespace {

constexpr double kLogBranchWidth = 1e-9; // |r - 1| below this uses the log limit
constexpr double kProbFloor = 1e-9;

} // namespace

void PlannerParams::validate() const {
    if (!(risk_aversion > 0.0)) {
        throw std::invalid_argument("planner: risk_aversion must be positive");
    }
    if (!(discount >= 0.0 && discount <= 1.0)) {
        throw std::invalid_argument("planner: discount must lie in [0, 1]");
    }
    if (periods < 1) {
        throw std::invalid_argument("planner: periods must be at least 1");
    }
}

double crra_utility(double x, double r) {
    if (!(x > 0.0)) {
        throw std::domain_error("crra_utility: x must be positive");
    }
    if (std::fabs(r - 1.0) < kLogBranchWidth) {
        return std::log(x);
    }
    const double u = (std::pow(x, 1.0 - r) - 1.0) / (1.0 - r);
    return u == 0.0 ? 0.0 : u; // normalize the -0.0 that x = 1 produces for r > 1
}

double one_shot_optimum(double r) {
    if (!(r > 0.0)) {
        throw std::domain_error("one_shot_optimum: r must be positive");
    }
    double p;
    if (std::fabs(r - 1.0) < kLogBranchWidth) {
        p = std::exp(-1.0);
    } else {
        p = std::pow(r, 1.0 / (1.0 - r));
    }
    return p < 1.0 ? p : 1.0;
}

SubmissionPlan optimal_plan(const PlannerParams& params) {
    params.validate();
    const double r = params.risk_aversion;
    const double beta = params.discount;
    const int n = params.periods;

    SubmissionPlan plan;
    plan.probs.assign(n, 1.0);
    plan.values.assign(n, 0.0);
    // Terminal period: sure acceptance at unit payoff, utility u(1) = 0.
    plan.probs[n - 1] = 1.0;
    plan.values[n - 1] = 0.0;

    const bool log_branch = std::fabs(r - 1.0) < kLogBranchWidth;
    for (int i = n - 2; i >= 0; --i) {
        const double continuation = beta * plan.values[i + 1];
        double p;
        if (log_branch) {
            p = std::exp(-(1.0 + continuation));
        } else {
            // First-order condition under CRRA: p^(r-1) = (1 + (1-r) b U) / r.
            const double base = (1.0 + (1.0 - r) * continuation) / r;
            if (base <= 0.0) {
                p = kProbFloor;
                plan.foc_clamped = true;
            } else {
                p = std::pow(base, 1.0 / (r - 1.0));
            }
        }
        if (p < kProbFloor) {
            p = kProbFloor;
            plan.foc_clamped = true;
        }
        if (p > 1.0) p = 1.0;
        plan.probs[i] = p;
        plan.values[i] = p * crra_utility(1.0 / p, r) + (1.0 - p) * continuation;
    }
    return plan;
}

std::vector<bool> horizon_diagnostic(const SubmissionPlan& plan, double discount) {
    const std::size_t n = plan.values.size();
    std::vector<bool> hurts;
    if (n < 2) return hurts;
    hurts.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        hurts.push_back(plan.values[i] < discount * plan.values[i + 1]);
    }
    return hurts;
}

} // namespace pubsim
