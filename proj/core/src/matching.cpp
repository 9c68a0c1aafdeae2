#include "pubsim/matching.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace pubsim {

namespace {

struct DenseInstance {
    std::unordered_map<int, int> paper_index;
    std::unordered_map<int, int> journal_index;
    // rank tables, -1 = unacceptable
    std::vector<std::vector<int>> paper_rank;   // [paper][journal] -> rank
    std::vector<std::vector<int>> journal_rank; // [journal][paper] -> rank
};

DenseInstance densify(const MatchingInstance& instance) {
    DenseInstance d;
    for (std::size_t i = 0; i < instance.papers.size(); ++i) {
        if (!d.paper_index.emplace(instance.papers[i].id, static_cast<int>(i)).second) {
            throw std::invalid_argument("matching: duplicate paper id " +
                                        std::to_string(instance.papers[i].id));
        }
    }
    for (std::size_t j = 0; j < instance.journals.size(); ++j) {
        if (!d.journal_index.emplace(instance.journals[j].id, static_cast<int>(j)).second) {
            throw std::invalid_argument("matching: duplicate journal id " +
                                        std::to_string(instance.journals[j].id));
        }
    }
    d.paper_rank.assign(instance.papers.size(),
                        std::vector<int>(instance.journals.size(), -1));
    d.journal_rank.assign(instance.journals.size(),
                          std::vector<int>(instance.papers.size(), -1));
    for (std::size_t i = 0; i < instance.papers.size(); ++i) {
        const auto& prefs = instance.papers[i].prefs;
        for (std::size_t r = 0; r < prefs.size(); ++r) {
            const auto it = d.journal_index.find(prefs[r]);
            if (it == d.journal_index.end()) {
                throw std::invalid_argument("matching: paper lists unknown journal id " +
                                            std::to_string(prefs[r]));
            }
            int& cell = d.paper_rank[i][it->second];
            if (cell != -1) {
                throw std::invalid_argument("matching: duplicate entry in paper preference list");
            }
            cell = static_cast<int>(r);
        }
    }
    for (std::size_t j = 0; j < instance.journals.size(); ++j) {
        if (instance.journals[j].capacity < 0) {
            throw std::invalid_argument("matching: negative capacity");
        }
        const auto& prefs = instance.journals[j].prefs;
        for (std::size_t r = 0; r < prefs.size(); ++r) {
            const auto it = d.paper_index.find(prefs[r]);
            if (it == d.paper_index.end()) {
                throw std::invalid_argument("matching: journal lists unknown paper id " +
                                            std::to_string(prefs[r]));
            }
            int& cell = d.journal_rank[j][it->second];
            if (cell != -1) {
                throw std::invalid_argument("matching: duplicate entry in journal preference list");
            }
            cell = static_cast<int>(r);
        }
    }
    return d;
}

} // namespace

void validate_instance(const MatchingInstance& instance) {
    (void)densify(instance);
}

MatchingResult solve_journal_optimal(const MatchingInstance& instance) {
    const DenseInstance d = densify(instance);
    const int n_papers = static_cast<int>(instance.papers.size());
    const int n_journals = static_cast<int>(instance.journals.size());

    std::vector<int> next_proposal(n_journals, 0); // cursor into journal pref list
    std::vector<int> assigned_count(n_journals, 0);
    std::vector<int> held_journal(n_papers, -1); // dense journal index or -1
    std::vector<char> queued(n_journals, 0);
    std::deque<int> queue;

    auto enqueue = [&](int j) {
        if (!queued[j] && assigned_count[j] < instance.journals[j].capacity &&
            next_proposal[j] < static_cast<int>(instance.journals[j].prefs.size())) {
            queued[j] = 1;
            queue.push_back(j);
        }
    };
    for (int j = 0; j < n_journals; ++j) enqueue(j);

    while (!queue.empty()) {
        const int j = queue.front();
        queue.pop_front();
        queued[j] = 0;
        const auto& prefs = instance.journals[j].prefs;
        while (assigned_count[j] < instance.journals[j].capacity &&
               next_proposal[j] < static_cast<int>(prefs.size())) {
            const int p = d.paper_index.at(prefs[next_proposal[j]++]);
            const int offer_rank = d.paper_rank[p][j];
            if (offer_rank < 0) continue; // journal not acceptable to this paper
            const int held = held_journal[p];
            if (held == -1) {
                held_journal[p] = j;
                ++assigned_count[j];
            } else if (offer_rank < d.paper_rank[p][held]) {
                held_journal[p] = j;
                ++assigned_count[j];
                --assigned_count[held];
                enqueue(held); // freed slot, journal resumes proposing
            }
        }
    }

    MatchingResult result;
    for (int p = 0; p < n_papers; ++p) {
        if (held_journal[p] != -1) {
            result.assignment.emplace(instance.papers[p].id,
                                      instance.journals[held_journal[p]].id);
        }
    }
    return result;
}

std::vector<BlockingPair> check_stability(const MatchingInstance& instance,
                                          const MatchingResult& result) {
    const DenseInstance d = densify(instance);
    const int n_journals = static_cast<int>(instance.journals.size());

    std::vector<int> assigned_count(n_journals, 0);
    std::vector<std::vector<int>> assignees(n_journals); // dense paper indices
    std::vector<int> matched_journal(instance.papers.size(), -1);
    for (const auto& [paper_id, journal_id] : result.assignment) {
        const auto pit = d.paper_index.find(paper_id);
        const auto jit = d.journal_index.find(journal_id);
        if (pit == d.paper_index.end() || jit == d.journal_index.end()) {
            throw std::invalid_argument("check_stability: assignment references unknown id");
        }
        matched_journal[pit->second] = jit->second;
        assignees[jit->second].push_back(pit->second);
        ++assigned_count[jit->second];
    }

    std::vector<BlockingPair> blocking;
    for (std::size_t p = 0; p < instance.papers.size(); ++p) {
        const int held = matched_journal[p];
        const int held_rank = held >= 0 ? d.paper_rank[p][held] : -1;
        const auto& prefs = instance.papers[p].prefs;
        for (std::size_t r = 0; r < prefs.size(); ++r) {
            if (held >= 0 && static_cast<int>(r) >= held_rank) break; // not preferred
            const int j = d.journal_index.at(prefs[r]);
            const int rank_at_j = d.journal_rank[j][p];
            if (rank_at_j < 0) continue; // paper not acceptable to the journal
            bool journal_wants = assigned_count[j] < instance.journals[j].capacity;
            if (!journal_wants) {
                for (const int other : assignees[j]) {
                    if (d.journal_rank[j][other] > rank_at_j) {
                        journal_wants = true;
                        break;
                    }
                }
            }
            if (journal_wants) {
                blocking.push_back(BlockingPair{instance.papers[p].id, instance.journals[j].id});
            }
        }
    }
    return blocking;
}

} // namespace pubsim
