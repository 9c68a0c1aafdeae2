#include "pubsim/status_quo.hpp"

#include <algorithm>
#include <memory>

namespace pubsim {

int select_bracket_journal(const std::vector<std::pair<int, double>>& probs_desc,
                           double target_prob) {
    // The list is sorted best-first, so the bracket journal is the last entry
    // still meeting the target; when everything beats the target this walks
    // down to the hardest journal available.
    int chosen = probs_desc.front().first;
    for (const auto& [journal_id, prob] : probs_desc) {
        if (prob >= target_prob) {
            chosen = journal_id;
        } else {
            break;
        }
    }
    return chosen;
}

int choose_next_journal(World& w, Paper& paper) {
    const int attempt = paper.attempts + 1;
    if (attempt >= w.cfg.n_att) return kAllAcceptanceJournalId;
    if (paper.first_submission_day >= 0 &&
        w.today - paper.first_submission_day > w.cfg.n_wait_years * kDaysPerYear) {
        return kAllAcceptanceJournalId;
    }

    std::vector<std::pair<int, double>> probs;
    probs.reserve(w.cfg.n_journals + 1);
    probs.emplace_back(kAllAcceptanceJournalId, 1.0);
    for (int k = 1; k <= w.cfg.n_journals; ++k) {
        if (paper.tried(k)) continue;
        const double perceived =
            perceive_journal_quality(w.rng_perception, w.journals[k], w.cfg.sigma_journal);
        probs.emplace_back(k, acceptance_probability(paper.quality, perceived));
    }
    if (probs.size() == 1) return kAllAcceptanceJournalId; // peer journals exhausted

    std::sort(probs.begin(), probs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return select_bracket_journal(probs, w.plan.probs[attempt - 1]);
}

bool accepts_review_invitation(int review_load, double perceived_journal_quality,
                               double researcher_quality, double tolerance) {
    if (review_load >= kMaxConcurrentReviews) return false;
    return perceived_journal_quality >= researcher_quality - tolerance;
}

bool journal_accepts(double mean_score, double journal_quality, double tolerance) {
    return mean_score >= journal_quality - tolerance;
}

void submit_status_quo(World& w, int paper_id) {
    Paper& paper = w.papers[paper_id];
    if (paper.first_submission_day < 0) {
        paper.first_submission_day = w.today;
        paper.measured = w.today >= w.measure_start;
        if (paper.measured) ++w.ledger.written_papers;
    }
    const int journal_id = choose_next_journal(w, paper);
    paper.attempts += 1;
    paper.journals_tried.push_back(journal_id);
    if (journal_id == kAllAcceptanceJournalId) {
        publish_paper(w, paper_id, journal_id); // instant, same-day publication
        return;
    }
    paper.review = std::make_unique<ReviewCase>();
    paper.review->journal_id = journal_id;
    paper.review->submitted_day = w.today;
    for (int s = 0; s < kReviewsPerSubmission; ++s) invite_into_slot(w, paper_id, s);
    w.active_cases.push_back(paper_id);
}

void decide_publication(World& w, int paper_id) {
    Paper& paper = w.papers[paper_id];
    const Journal& journal = w.journals[paper.review->journal_id];
    const bool accept = journal_accepts(paper.review->mean_score(), journal.quality(),
                                        journal.tolerance(w.cfg.tolerance_fraction));
    const int journal_id = journal.id;
    paper.review.reset();
    if (accept) {
        publish_paper(w, paper_id, journal_id);
    } else {
        w.researchers[paper.author].resubmission_queue.push_back(paper_id);
    }
}

} // namespace pubsim
