#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pubsim {

struct PublicationRecord {
    int paper_id = -1;
    int journal_id = -1;
    bool all_acceptance = false;
    int delay_days = 0; // publication day minus first submission day
    int attempts = 1;
    double quality_fit = 0.0;
    double utility = 0.0;
    double discounted_utility = 0.0;
    double paper_quality = 0.0;

    bool operator==(const PublicationRecord&) const = default;
};

struct JournalRow {
    int id = -1;
    bool all_acceptance = false;
    double initial_quality = 0.0;
    double starting_quality = 0.0; // at the start of the measured window
    double final_quality = 0.0;
    long accepted_count = 0;

    double percent_change() const {
        return (final_quality - starting_quality) / starting_quality * 100.0;
    }

    bool operator==(const JournalRow&) const = default;
};

/// Everything a run produces: raw counters over the measured window plus one
/// record per measured publication and one row per journal.
struct MetricsLedger {
    std::uint64_t written_papers = 0;
    std::uint64_t invitations_sent = 0;
    std::uint64_t reviews_completed = 0;
    std::vector<PublicationRecord> publications;
    std::vector<JournalRow> journals;

    bool operator==(const MetricsLedger&) const = default;
};

/// Location statistics of one metric. Median is the lower middle element for
/// even counts; quartiles are medians of the lower/upper halves (the median
/// itself belongs to both halves when the count is odd); MAD is the median
/// absolute deviation from the median.
struct SummaryStats {
    bool empty = true;
    std::int64_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double mad = 0.0;
};

SummaryStats summarize(std::vector<double> values);

/// One reported metric, with and without the all-acceptance journal.
struct MetricBlock {
    SummaryStats all;
    SummaryStats peer_reviewed_only;
};

struct ReportCounts {
    std::uint64_t written_papers = 0;
    std::uint64_t publications_total = 0;
    std::uint64_t publications_peer_reviewed = 0;
    std::uint64_t publications_all_acceptance = 0;
    std::uint64_t reviews_completed = 0;
    std::uint64_t invitations_sent = 0;
    double pct_papers_published = 0.0;
    double pct_papers_peer_reviewed = 0.0;
    double pct_papers_all_acceptance = 0.0;
    double pct_publications_peer_reviewed = 0.0;
    double pct_publications_all_acceptance = 0.0;
    double reviews_per_paper = 0.0;
    double reviews_per_publication = 0.0;
    double invitations_per_paper = 0.0;
    double invitations_per_publication = 0.0;
    double reviewer_acceptance_rate = 0.0; // reviews completed / invitations sent
};

struct Report {
    ReportCounts counts;
    MetricBlock delay_days;
    MetricBlock attempts;
    MetricBlock quality_fit;
    MetricBlock utility;
    MetricBlock discounted_utility;
    SummaryStats all_acceptance_paper_quality;
    // Journal-quality distribution, all-acceptance journal excluded.
    SummaryStats journal_initial_quality;
    SummaryStats journal_starting_quality;
    SummaryStats journal_final_quality;
    SummaryStats journal_percent_change;
};

Report build_report(const MetricsLedger& ledger);

/// Human-readable summary table, one block per metric.
std::string render_report_text(const Report& report, const std::string& scenario_name);

} // namespace pubsim
