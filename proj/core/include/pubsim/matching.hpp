#pragma once

#include <map>
#include <vector>

namespace pubsim {

/// Many-to-one matching instance. Preference lists are strict (no duplicates)
/// and may be partial: an id missing from the other side's list makes the
/// pair mutually unmatchable.
struct MatchingInstance {
    struct PaperEntry {
        int id = -1;
        std::vector<int> prefs; // journal ids, best first
    };
    struct JournalEntry {
        int id = -1;
        int capacity = 0;
        std::vector<int> prefs; // paper ids, best first
    };
    std::vector<PaperEntry> papers;
    std::vector<JournalEntry> journals;
};

/// Stable assignment; papers absent from the map are unmatched.
struct MatchingResult {
    std::map<int, int> assignment; // paper id -> journal id
};

struct BlockingPair {
    int paper = -1;
    int journal = -1;
    bool operator==(const BlockingPair&) const = default;
};

/// Throws std::invalid_argument on duplicate preference entries, unknown ids
/// or negative capacities.
void validate_instance(const MatchingInstance& instance);

/// Journal-optimal stable matching via journal-proposing deferred acceptance:
/// journals propose down their lists, papers tentatively hold the best offer
/// according to their own lists.
MatchingResult solve_journal_optimal(const MatchingInstance& instance);

/// All pairs (paper, journal) that would rather be matched with each other
/// than stay with the given assignment. Empty output certifies stability.
std::vector<BlockingPair> check_stability(const MatchingInstance& instance,
                                          const MatchingResult& result);

} // namespace pubsim
