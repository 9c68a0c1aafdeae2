#pragma once

#include "pubsim/config.hpp"
#include "pubsim/metrics.hpp"
#include "pubsim/model.hpp"
#include "pubsim/planner.hpp"

#include <optional>
#include <vector>

namespace pubsim {

constexpr int kDaysPerYear = 365;

/// A reviewed manuscript sitting in the warehouse, waiting for an allocation
/// round. prefs is the journal ranking frozen at submission time.
struct ReadyPaper {
    int paper_id = -1;
    double score = 0.0; // mean of the three review scores
    int intake_day = -1;
    std::vector<int> prefs;
};

/// Full mutable state of one replication. Owned by a single thread; separate
/// replications share nothing.
struct World {
    SimConfig cfg;
    std::vector<Researcher> researchers;
    std::vector<Journal> journals; // journals[0] is the all-acceptance venue
    std::vector<Paper> papers;

    Rng rng_agents;
    Rng rng_paper_quality;
    Rng rng_review_noise;
    Rng rng_perception;
    Rng rng_scheduler;
    Rng rng_reviewer_pick;

    SubmissionPlan plan; // shared by the whole population

    int today = 0;
    int measure_start = 0;
    int total_days = 0;
    bool starting_recorded = false;
    std::vector<double> starting_quality; // per journal, at the measured-window start

    MetricsLedger ledger;
    std::vector<int> active_cases; // paper ids with an in-flight review round
    std::vector<ReadyPaper> ready; // warehouse inventory awaiting allocation
    std::vector<int> activation_order;

    explicit World(const SimConfig& config);
};

/// Samples the agent populations and zeroes all counters.
World initialize_world(const SimConfig& cfg);

/// One full simulated day: shuffled researcher activations, then journal and
/// warehouse processing, then (DAA) the end-of-day allocation check.
void advance_day(World& w);

/// Runs rampup plus the measured window and returns the completed ledger.
MetricsLedger run(const SimConfig& cfg);

// --- pipeline pieces shared by both scenarios (exposed for tests) ---

int create_paper(World& w, int researcher_id);

/// Uniformly random reviewer for the manuscript: never the author and never
/// anyone already invited for it. Empty when the pool is exhausted.
std::optional<int> pick_reviewer(World& w, const Paper& paper);

/// Invites a reviewer into one slot; on pool exhaustion the slot defaults to
/// a score of 0. Returns whether an invitation went out.
bool invite_into_slot(World& w, int paper_id, int slot_idx);

/// Replacement invitations for declined slots, then completion handling:
/// status quo manuscripts get an accept/reject decision, warehouse
/// manuscripts move to the ready inventory.
void process_review_cases(World& w);

void publish_paper(World& w, int paper_id, int journal_id);

void record_starting_qualities(World& w);

} // namespace pubsim
