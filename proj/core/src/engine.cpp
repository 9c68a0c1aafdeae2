#include "pubsim/engine.hpp"

#include "pubsim/distributions.hpp"
#include "pubsim/status_quo.hpp"
#include "pubsim/warehouse.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pubsim {

World::World(const SimConfig& config)
    : cfg(config),
      rng_agents(config.seed, RngStream::agent_creation),
      rng_paper_quality(config.seed, RngStream::paper_quality),
      rng_review_noise(config.seed, RngStream::review_noise),
      rng_perception(config.seed, RngStream::journal_perception),
      rng_scheduler(config.seed, RngStream::scheduler),
      rng_reviewer_pick(config.seed, RngStream::reviewer_selection) {}

World initialize_world(const SimConfig& cfg) {
    cfg.validate();
    World w(cfg);
    w.measure_start = cfg.rampup_years * kDaysPerYear;
    w.total_days = (cfg.rampup_years + cfg.run_years) * kDaysPerYear;

    const auto quality_spec = BoundedGumbelSpec::make(cfg.researcher_quality.skew,
                                                      cfg.researcher_quality.lo,
                                                      cfg.researcher_quality.hi);
    const auto writing_spec = BoundedGumbelSpec::make(cfg.writing_days.skew,
                                                      cfg.writing_days.lo,
                                                      cfg.writing_days.hi);
    const auto journal_spec = BoundedGumbelSpec::make(cfg.journal_quality.skew,
                                                      cfg.journal_quality.lo,
                                                      cfg.journal_quality.hi);

    w.researchers.resize(cfg.n_researchers);
    for (int i = 0; i < cfg.n_researchers; ++i) {
        Researcher& r = w.researchers[i];
        r.id = i;
        r.quality = bounded_gumbel_sample(w.rng_agents, quality_spec);
        r.writing_days = static_cast<int>(std::ceil(bounded_gumbel_sample(w.rng_agents, writing_spec)));
        r.review_tolerance = cfg.tolerance_fraction * r.quality;
    }

    w.journals.resize(cfg.n_journals + 1);
    w.journals[kAllAcceptanceJournalId].id = kAllAcceptanceJournalId;
    w.journals[kAllAcceptanceJournalId].all_acceptance = true;
    w.journals[kAllAcceptanceJournalId].initial_quality = 0.0;
    for (int k = 1; k <= cfg.n_journals; ++k) {
        w.journals[k].id = k;
        w.journals[k].initial_quality = bounded_gumbel_sample(w.rng_agents, journal_spec);
    }

    w.plan = optimal_plan(PlannerParams{cfg.risk_aversion, cfg.discount, cfg.n_att});

    w.activation_order.resize(cfg.n_researchers);
    std::iota(w.activation_order.begin(), w.activation_order.end(), 0);
    return w;
}

int create_paper(World& w, int researcher_id) {
    const int pid = static_cast<int>(w.papers.size());
    Paper p;
    p.id = pid;
    p.author = researcher_id;
    p.quality = draw_paper_quality(w.rng_paper_quality, w.researchers[researcher_id].quality,
                                   w.cfg.sigma_paper);
    p.created_day = w.today;
    w.papers.push_back(std::move(p));
    return pid;
}

std::optional<int> pick_reviewer(World& w, const Paper& paper) {
    const int n = w.cfg.n_researchers;
    // Everyone already invited is unique and never the author.
    const long candidates = static_cast<long>(n) - 1 -
                            static_cast<long>(paper.invited_reviewers.size());
    if (candidates <= 0) return std::nullopt;
    for (;;) {
        const int pick = static_cast<int>(w.rng_reviewer_pick.uniform_below(n));
        if (pick == paper.author || paper.was_invited(pick)) continue;
        return pick;
    }
}

bool invite_into_slot(World& w, int paper_id, int slot_idx) {
    Paper& p = w.papers[paper_id];
    ReviewSlot& slot = p.review->slots[slot_idx];
    const auto reviewer = pick_reviewer(w, p);
    if (!reviewer) {
        slot.reviewer = -1;
        slot.state = SlotState::scored;
        slot.score = 0.0;
        slot.defaulted = true;
        return false;
    }
    slot.reviewer = *reviewer;
    // The sending day counts as the first day of the response window, so the
    // fastest submission-to-decision chain takes eta_resp + eta_rev - 1 days.
    slot.response_due = w.today + w.cfg.eta_resp_days - 1;
    slot.review_due = -1;
    slot.state = SlotState::awaiting_response;
    slot.defaulted = false;
    p.invited_reviewers.push_back(*reviewer);
    w.researchers[*reviewer].invitations.push_back(
        PendingInvitation{paper_id, slot_idx, slot.response_due});
    if (p.measured) ++w.ledger.invitations_sent;
    return true;
}

namespace {

void respond_to_invitation(World& w, Researcher& res, const PendingInvitation& inv) {
    Paper& p = w.papers[inv.paper_id];
    ReviewSlot& slot = p.review->slots[inv.slot];
    bool accept;
    if (res.review_load >= kMaxConcurrentReviews) {
        accept = false;
    } else if (p.review->journal_id < 0) {
        accept = warehouse_accepts_invitation(res.review_load);
    } else {
        const double perceived = perceive_journal_quality(
            w.rng_perception, w.journals[p.review->journal_id], w.cfg.sigma_journal);
        accept = accepts_review_invitation(res.review_load, perceived, res.quality,
                                           res.review_tolerance);
    }
    if (accept) {
        slot.state = SlotState::accepted;
        slot.review_due = w.today + w.cfg.eta_rev_days;
        res.review_load += 1;
        res.reviews.push_back(ScheduledReview{inv.paper_id, inv.slot, slot.review_due});
    } else {
        slot.state = SlotState::needs_replacement;
    }
}

void deliver_review(World& w, Researcher& res, const ScheduledReview& job) {
    Paper& p = w.papers[job.paper_id];
    ReviewSlot& slot = p.review->slots[job.slot];
    slot.score = trunc_normal_sample(w.rng_review_noise,
                                     TruncNormalSpec{p.quality, w.cfg.sigma_review, 0.0, 1.0});
    slot.state = SlotState::scored;
    res.review_load -= 1;
    if (p.measured) ++w.ledger.reviews_completed;
}

void step_researcher(World& w, int rid) {
    Researcher& res = w.researchers[rid];

    if (!res.resubmission_queue.empty()) {
        std::vector<int> queue;
        queue.swap(res.resubmission_queue);
        for (int pid : queue) submit_status_quo(w, pid);
    }

    res.writing_progress += 1;
    if (res.writing_progress >= res.writing_days) {
        res.writing_progress = 0; // the next manuscript starts immediately
        const int pid = create_paper(w, rid);
        if (w.cfg.scenario == Scenario::status_quo) {
            submit_status_quo(w, pid);
        } else {
            submit_to_warehouse(w, pid);
        }
    }

    if (!res.invitations.empty()) {
        std::vector<PendingInvitation> due;
        std::erase_if(res.invitations, [&](const PendingInvitation& inv) {
            if (inv.response_due <= w.today) {
                due.push_back(inv);
                return true;
            }
            return false;
        });
        for (const auto& inv : due) respond_to_invitation(w, res, inv);
    }

    if (!res.reviews.empty()) {
        std::vector<ScheduledReview> due;
        std::erase_if(res.reviews, [&](const ScheduledReview& job) {
            if (job.review_due <= w.today) {
                due.push_back(job);
                return true;
            }
            return false;
        });
        for (const auto& job : due) deliver_review(w, res, job);
    }
}

void move_to_ready(World& w, int paper_id) {
    Paper& p = w.papers[paper_id];
    w.ready.push_back(ReadyPaper{paper_id, p.review->mean_score(), p.review->submitted_day,
                                 std::move(p.review->journal_prefs)});
    p.review.reset();
}

} // namespace

void process_review_cases(World& w) {
    std::vector<int> still_active;
    still_active.reserve(w.active_cases.size());
    for (const int pid : w.active_cases) {
        Paper& p = w.papers[pid];
        for (int s = 0; s < kReviewsPerSubmission; ++s) {
            if (p.review->slots[s].state == SlotState::needs_replacement) {
                invite_into_slot(w, pid, s);
            }
        }
        if (p.review->complete()) {
            if (w.cfg.scenario == Scenario::status_quo) {
                decide_publication(w, pid);
            } else {
                move_to_ready(w, pid);
            }
        } else {
            still_active.push_back(pid);
        }
    }
    w.active_cases.swap(still_active);
}

void publish_paper(World& w, int paper_id, int journal_id) {
    Paper& p = w.papers[paper_id];
    Journal& j = w.journals[journal_id];
    p.outcome = PaperOutcome::published;
    p.published_journal = journal_id;
    p.published_day = w.today;
    j.record_acceptance(p.quality);
    if (!p.measured) return;
    PublicationRecord rec;
    rec.paper_id = paper_id;
    rec.journal_id = journal_id;
    rec.all_acceptance = j.all_acceptance;
    rec.delay_days = w.today - p.first_submission_day;
    rec.attempts = p.attempts;
    const double jq = j.quality();
    rec.quality_fit = quality_fit(p.quality, jq);
    rec.utility = publication_utility(p.quality, jq, w.cfg.risk_aversion);
    rec.discounted_utility = discounted_utility(rec.utility, p.attempts, w.cfg.discount);
    rec.paper_quality = p.quality;
    w.ledger.publications.push_back(rec);
}

void record_starting_qualities(World& w) {
    w.starting_quality.resize(w.journals.size());
    for (std::size_t k = 0; k < w.journals.size(); ++k) {
        w.starting_quality[k] = w.journals[k].quality();
    }
    w.starting_recorded = true;
}

void advance_day(World& w) {
    if (!w.starting_recorded && w.today == w.measure_start) {
        record_starting_qualities(w);
    }
    w.rng_scheduler.shuffle(w.activation_order);
    for (const int rid : w.activation_order) step_researcher(w, rid);
    process_review_cases(w);
    if (w.cfg.scenario == Scenario::daa &&
        static_cast<int>(w.ready.size()) >= w.cfg.n_journals + 1) {
        run_allocation_round(w);
    }
    w.today += 1;
}

MetricsLedger run(const SimConfig& cfg) {
    World w = initialize_world(cfg);
    while (w.today < w.total_days) advance_day(w);
    if (!w.starting_recorded) record_starting_qualities(w);

    w.ledger.journals.reserve(w.journals.size());
    for (std::size_t k = 0; k < w.journals.size(); ++k) {
        const Journal& j = w.journals[k];
        w.ledger.journals.push_back(JournalRow{j.id, j.all_acceptance, j.initial_quality,
                                               w.starting_quality[k], j.quality(),
                                               j.accepted_count});
    }
    return std::move(w.ledger);
}

} // namespace pubsim
