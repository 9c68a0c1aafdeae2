#pragma once

#include "pubsim/engine.hpp"
#include "pubsim/matching.hpp"

namespace pubsim {

/// Per-round journal capacities: every peer-reviewed journal gets an equal
/// floor share of the inventory, the all-acceptance journal absorbs the rest.
struct CapacityVector {
    int per_journal = 0;     // capacity of each peer-reviewed journal
    int all_acceptance = 0;  // remainder, never below per_journal
};

/// Requires n_ready >= n_journals + 1 (enough papers for every journal
/// including the all-acceptance venue); throws std::logic_error otherwise.
CapacityVector compute_capacities(int n_ready, int n_journals);

/// Warehouse intake: freezes the journal preference list (perceived quality
/// best-to-worst, all-acceptance strictly last) and sends three review
/// invitations.
void submit_to_warehouse(World& w, int paper_id);

/// Warehouse invitation rule: capacity is the only reason to decline.
bool warehouse_accepts_invitation(int review_load);

/// Matching instance for one round over an inventory already sorted by
/// (score desc, intake asc, paper id asc): frozen per-paper preferences, the
/// shared score ranking for every journal, capacities from the round size.
MatchingInstance build_allocation_instance(const std::vector<ReadyPaper>& ready_sorted,
                                           int n_journals);

/// Solves one allocation round over the whole ready inventory with a single
/// score-ranked preference list shared by all journals, publishes every
/// matched paper the same day and empties the inventory.
void run_allocation_round(World& w);

} // namespace pubsim
