#include "pubsim/model.hpp"

#include "pubsim/distributions.hpp"
#include "pubsim/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pubsim {

bool Paper::tried(int journal_id) const {
    return std::find(journals_tried.begin(), journals_tried.end(), journal_id) !=
           journals_tried.end();
}

bool Paper::was_invited(int researcher_id) const {
    return std::find(invited_reviewers.begin(), invited_reviewers.end(), researcher_id) !=
           invited_reviewers.end();
}

double draw_paper_quality(Rng& rng, double researcher_quality, double sigma_paper) {
    return trunc_normal_sample(rng, TruncNormalSpec{researcher_quality, sigma_paper, 0.0, 1.0});
}

double perceive_journal_quality(Rng& rng, const Journal& journal, double sigma_journal) {
    if (journal.all_acceptance) return 0.0;
    return trunc_normal_sample(rng, TruncNormalSpec{journal.quality(), sigma_journal, 0.0, 1.0});
}

double acceptance_probability(double paper_quality, double journal_quality) {
    if (journal_quality <= 0.0) return 1.0;
    return 1.0 - regularized_incomplete_beta(journal_quality, 1.0 + paper_quality,
                                             2.0 - paper_quality);
}

double quality_fit(double paper_quality, double journal_quality) {
    return 1.0 - std::fabs(paper_quality - journal_quality);
}

double publication_utility(double paper_quality, double journal_quality, double risk_aversion) {
    const double p = acceptance_probability(paper_quality, journal_quality);
    return crra_utility(1.0 / p, risk_aversion);
}

double discounted_utility(double utility, int attempts, double discount) {
    if (attempts < 1) {
        throw std::domain_error("discounted_utility: attempts must be at least 1");
    }
    return std::pow(discount, attempts - 1) * utility;
}

} // namespace pubsim
