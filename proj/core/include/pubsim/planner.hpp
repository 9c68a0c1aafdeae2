#pragma once

#include <vector>

namespace pubsim {

/// Parameters of the multi-period submission problem: constant relative risk
/// aversion, per-period discount factor, and the number of periods including
/// the terminal sure-acceptance period.
struct PlannerParams {
    double risk_aversion = 1.5; // > 0
    double discount = 0.9;      // in [0, 1]
    int periods = 6;            // >= 1

    void validate() const;
};

/// Optimal submission plan. probs[i] is the acceptance probability the author
/// targets on attempt i+1; values[i] is the expected utility of entering that
/// period. probs.back() == 1 and values.back() == 0 always. When the
/// first-order condition degenerates numerically the affected probabilities
/// are clamped to a tiny floor and foc_clamped is set.
struct SubmissionPlan {
    std::vector<double> probs;
    std::vector<double> values;
    bool foc_clamped = false;
};

/// CRRA utility (x^(1-r) - 1) / (1 - r), with the natural-log limit applied
/// for r within 1e-9 of 1. Throws std::domain_error for x <= 0.
double crra_utility(double x, double r);

/// Optimal acceptance probability of the single-attempt problem, r^(1/(1-r)),
/// continuous through r = 1 where it equals 1/e. Clamped to at most 1.
double one_shot_optimum(double r);

/// Backward-recursive optimal plan over params.periods attempts.
SubmissionPlan optimal_plan(const PlannerParams& params);

/// For each non-terminal period i, reports whether the author would rather
/// not use it (value of entering period i falls below the discounted value
/// of skipping straight to period i+1). Purely diagnostic.
std::vector<bool> horizon_diagnostic(const SubmissionPlan& plan, double discount);

} // namespace pubsim
