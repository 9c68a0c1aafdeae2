#include "pubsim/warehouse.hpp"

#include "pubsim/matching.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace pubsim {

CapacityVector compute_capacities(int n_ready, int n_journals) {
    if (n_ready < n_journals + 1) {
        throw std::logic_error("compute_capacities: inventory smaller than the journal count");
    }
    CapacityVector c;
    c.per_journal = n_ready / (n_journals + 1);
    c.all_acceptance = n_ready - n_journals * c.per_journal;
    return c;
}

bool warehouse_accepts_invitation(int review_load) {
    return review_load < kMaxConcurrentReviews;
}

void submit_to_warehouse(World& w, int paper_id) {
    Paper& paper = w.papers[paper_id];
    paper.first_submission_day = w.today;
    paper.measured = w.today >= w.measure_start;
    if (paper.measured) ++w.ledger.written_papers;
    paper.attempts = 1; // the warehouse publishes everything in one attempt
    paper.journals_tried.clear();

    // Preference list frozen at submission: perceived quality best-to-worst,
    // the all-acceptance journal strictly last.
    std::vector<std::pair<double, int>> perceived;
    perceived.reserve(w.cfg.n_journals);
    for (int k = 1; k <= w.cfg.n_journals; ++k) {
        perceived.emplace_back(
            perceive_journal_quality(w.rng_perception, w.journals[k], w.cfg.sigma_journal), k);
    }
    std::sort(perceived.begin(), perceived.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    paper.review = std::make_unique<ReviewCase>();
    paper.review->journal_id = -1;
    paper.review->submitted_day = w.today;
    paper.review->journal_prefs.reserve(w.cfg.n_journals + 1);
    for (const auto& [q, k] : perceived) paper.review->journal_prefs.push_back(k);
    paper.review->journal_prefs.push_back(kAllAcceptanceJournalId);

    for (int s = 0; s < kReviewsPerSubmission; ++s) invite_into_slot(w, paper_id, s);
    w.active_cases.push_back(paper_id);
}

MatchingInstance build_allocation_instance(const std::vector<ReadyPaper>& ready_sorted,
                                           int n_journals) {
    const int n_ready = static_cast<int>(ready_sorted.size());
    const CapacityVector caps = compute_capacities(n_ready, n_journals);

    std::vector<int> shared_ranking;
    shared_ranking.reserve(n_ready);
    for (const auto& rp : ready_sorted) shared_ranking.push_back(rp.paper_id);

    MatchingInstance instance;
    instance.papers.reserve(n_ready);
    for (const auto& rp : ready_sorted) {
        instance.papers.push_back(MatchingInstance::PaperEntry{rp.paper_id, rp.prefs});
    }
    instance.journals.reserve(n_journals + 1);
    instance.journals.push_back(MatchingInstance::JournalEntry{
        kAllAcceptanceJournalId, caps.all_acceptance, shared_ranking});
    for (int k = 1; k <= n_journals; ++k) {
        instance.journals.push_back(
            MatchingInstance::JournalEntry{k, caps.per_journal, shared_ranking});
    }
    return instance;
}

void run_allocation_round(World& w) {
    // One shared ranking: score descending, ties by intake day then paper id.
    std::sort(w.ready.begin(), w.ready.end(), [](const ReadyPaper& a, const ReadyPaper& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.intake_day != b.intake_day) return a.intake_day < b.intake_day;
        return a.paper_id < b.paper_id;
    });
    const MatchingInstance instance = build_allocation_instance(w.ready, w.cfg.n_journals);
    const MatchingResult result = solve_journal_optimal(instance);
    for (const auto& rp : w.ready) {
        const auto it = result.assignment.find(rp.paper_id);
        if (it == result.assignment.end()) {
            throw std::runtime_error("allocation round left paper " +
                                     std::to_string(rp.paper_id) + " unmatched");
        }
        publish_paper(w, rp.paper_id, it->second);
    }
    w.ready.clear();
}

} // namespace pubsim
