#pragma once

#include "pubsim/rng.hpp"

#include <array>
#include <memory>
#include <vector>

namespace pubsim {

/// Standard deviations of the three noise channels: paper quality around the
/// author's quality, review scores around the paper's quality, and perceived
/// journal quality around the true journal quality.
struct NoiseConfig {
    double sigma_paper = 0.1;
    double sigma_review = 0.2;
    double sigma_journal = 0.05;
};

constexpr int kMaxConcurrentReviews = 3; // hard per-researcher review cap
constexpr int kReviewsPerSubmission = 3;
constexpr double kJournalInitialWeight = 1000.0; // initial quality weighs like 1,000 papers
constexpr int kAllAcceptanceJournalId = 0;

struct PendingInvitation {
    int paper_id = -1;
    int slot = -1;
    int response_due = -1;
};

struct ScheduledReview {
    int paper_id = -1;
    int slot = -1;
    int review_due = -1;
};

struct Researcher {
    int id = -1;
    double quality = 0.0;        // in (0, 1), static over a run
    int writing_days = 1;        // days to finish one manuscript
    double review_tolerance = 0; // how far below own quality a journal may be
    int review_load = 0;         // accepted, not yet delivered reviews
    int writing_progress = 0;

    std::vector<PendingInvitation> invitations;
    std::vector<ScheduledReview> reviews;
    std::vector<int> resubmission_queue; // rejected papers to resubmit next activation
};

struct Journal {
    int id = -1;
    double initial_quality = 0.0;
    bool all_acceptance = false;
    long accepted_count = 0;
    double accepted_quality_sum = 0.0;

    /// Running quality: mean of accepted papers with the initial quality
    /// weighted like 1,000 papers. The all-acceptance journal is pinned at 0.
    double quality() const {
        if (all_acceptance) return 0.0;
        return (kJournalInitialWeight * initial_quality + accepted_quality_sum) /
               (kJournalInitialWeight + static_cast<double>(accepted_count));
    }

    double tolerance(double fraction) const { return fraction * quality(); }

    /// Records an accepted paper. The all-acceptance journal keeps the count
    /// for reporting but its quality never moves.
    void record_acceptance(double paper_quality) {
        accepted_count += 1;
        accepted_quality_sum += paper_quality;
    }
};

enum class SlotState {
    awaiting_response,
    accepted,
    needs_replacement,
    scored,
};

struct ReviewSlot {
    int reviewer = -1;
    int response_due = -1;
    int review_due = -1;
    SlotState state = SlotState::awaiting_response;
    double score = 0.0;
    bool defaulted = false; // reviewer pool exhausted, score forced to 0
};

/// In-flight review round for one manuscript: three slots pursued until each
/// holds a score (delivered or defaulted). journal_id is -1 for warehouse
/// intake, which also freezes the journal preference list captured at
/// submission time.
struct ReviewCase {
    int journal_id = -1;
    int submitted_day = -1;
    std::array<ReviewSlot, kReviewsPerSubmission> slots;
    std::vector<int> journal_prefs;

    bool complete() const {
        for (const auto& s : slots) {
            if (s.state != SlotState::scored) return false;
        }
        return true;
    }

    double mean_score() const {
        double sum = 0.0;
        for (const auto& s : slots) sum += s.score;
        return sum / static_cast<double>(kReviewsPerSubmission);
    }
};

enum class PaperOutcome { unpublished, published };

struct Paper {
    int id = -1;
    int author = -1;
    double quality = 0.0; // true quality, known exactly to the author
    int created_day = -1;
    int first_submission_day = -1;
    int attempts = 0;
    bool measured = false; // first submission fell inside the measured window
    std::vector<int> journals_tried;
    std::vector<int> invited_reviewers; // every reviewer ever invited, whole lifetime
    PaperOutcome outcome = PaperOutcome::unpublished;
    int published_journal = -1;
    int published_day = -1;
    std::unique_ptr<ReviewCase> review; // active submission under review

    bool tried(int journal_id) const;
    bool was_invited(int researcher_id) const;
};

/// True paper quality drawn around the author's quality.
double draw_paper_quality(Rng& rng, double researcher_quality, double sigma_paper);

/// Perceived journal quality; the all-acceptance journal is perfect
/// information and perceived as exactly 0.
double perceive_journal_quality(Rng& rng, const Journal& journal, double sigma_journal);

/// Believed acceptance probability 1 - I_q(1 + qP, 2 - qP) evaluated at the
/// (perceived) journal quality. Exactly 1 at journal quality 0.
double acceptance_probability(double paper_quality, double journal_quality);

/// Matching quality indicator 1 - |qP - qJ|, in [0, 1].
double quality_fit(double paper_quality, double journal_quality);

/// Author satisfaction u(1/p) at the true quality of the publishing journal.
double publication_utility(double paper_quality, double journal_quality, double risk_aversion);

/// Delay-adjusted satisfaction discount^(attempts - 1) * utility.
double discounted_utility(double utility, int attempts, double discount);

} // namespace pubsim
