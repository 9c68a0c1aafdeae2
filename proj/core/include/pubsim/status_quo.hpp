#pragma once

#include "pubsim/engine.hpp"

#include <utility>
#include <vector>

namespace pubsim {

/// Bracket rule over candidates sorted by perceived acceptance probability,
/// best (highest) first: returns the lowest-probability journal still meeting
/// the target, or the lowest-probability journal outright when every
/// candidate beats the target.
int select_bracket_journal(const std::vector<std::pair<int, double>>& probs_desc,
                           double target_prob);

/// Plan-driven journal selection for the paper's next attempt. Falls back to
/// the all-acceptance journal on the final attempt, after the waiting limit,
/// or once every peer-reviewed journal has been tried. Draws fresh journal
/// perceptions.
int choose_next_journal(World& w, Paper& paper);

/// Review-invitation rule: a saturated reviewer always declines; otherwise
/// accept iff the journal looks at most `tolerance` below the reviewer's own
/// quality.
bool accepts_review_invitation(int review_load, double perceived_journal_quality,
                               double researcher_quality, double tolerance);

/// Editorial decision rule on the mean of the three scores.
bool journal_accepts(double mean_score, double journal_quality, double tolerance);

/// Submits (or resubmits) a finished paper: picks the journal, publishes
/// instantly at the all-acceptance venue, otherwise opens a review round
/// with three invitations.
void submit_status_quo(World& w, int paper_id);

/// Accept/reject once all three scores are in. Rejected papers re-enter the
/// author's queue and are resubmitted on the next activation.
void decide_publication(World& w, int paper_id);

} // namespace pubsim
