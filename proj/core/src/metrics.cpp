#include "pubsim/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pubsim {

namespace {

// Lower middle element; the reported tables never interpolate.
double lower_median(const std::vector<double>& sorted, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    return sorted[lo + (n - 1) / 2];
}

} // namespace

SummaryStats summarize(std::vector<double> values) {
    SummaryStats s;
    if (values.empty()) return s;
    s.empty = false;
    s.count = static_cast<std::int64_t>(values.size());

    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());

    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    s.min = values.front();
    s.max = values.back();
    s.median = lower_median(values, 0, n);

    // Median-of-halves quartiles; odd counts put the median in both halves.
    const std::size_t mid = (n - 1) / 2;
    const std::size_t upper_begin = (n % 2 == 1) ? mid : n / 2;
    s.q1 = lower_median(values, 0, mid + 1);
    s.q3 = lower_median(values, upper_begin, n);

    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) dev[i] = std::abs(values[i] - s.median);
    std::sort(dev.begin(), dev.end());
    s.mad = lower_median(dev, 0, n);
    return s;
}

Report build_report(const MetricsLedger& ledger) {
    Report r;
    auto& c = r.counts;
    c.written_papers = ledger.written_papers;
    c.reviews_completed = ledger.reviews_completed;
    c.invitations_sent = ledger.invitations_sent;

    std::vector<double> delay_all, delay_peer;
    std::vector<double> attempts_all, attempts_peer;
    std::vector<double> fit_all, fit_peer;
    std::vector<double> util_all, util_peer;
    std::vector<double> disc_all, disc_peer;
    std::vector<double> aa_quality;
    for (const auto& p : ledger.publications) {
        ++c.publications_total;
        delay_all.push_back(p.delay_days);
        attempts_all.push_back(p.attempts);
        fit_all.push_back(p.quality_fit);
        util_all.push_back(p.utility);
        disc_all.push_back(p.discounted_utility);
        if (p.all_acceptance) {
            ++c.publications_all_acceptance;
            aa_quality.push_back(p.paper_quality);
        } else {
            ++c.publications_peer_reviewed;
            delay_peer.push_back(p.delay_days);
            attempts_peer.push_back(p.attempts);
            fit_peer.push_back(p.quality_fit);
            util_peer.push_back(p.utility);
            disc_peer.push_back(p.discounted_utility);
        }
    }

    const double papers = static_cast<double>(c.written_papers);
    const double pubs = static_cast<double>(c.publications_total);
    if (papers > 0) {
        c.pct_papers_published = 100.0 * pubs / papers;
        c.pct_papers_peer_reviewed = 100.0 * c.publications_peer_reviewed / papers;
        c.pct_papers_all_acceptance = 100.0 * c.publications_all_acceptance / papers;
        c.reviews_per_paper = c.reviews_completed / papers;
        c.invitations_per_paper = c.invitations_sent / papers;
    }
    if (pubs > 0) {
        c.pct_publications_peer_reviewed = 100.0 * c.publications_peer_reviewed / pubs;
        c.pct_publications_all_acceptance = 100.0 * c.publications_all_acceptance / pubs;
        c.reviews_per_publication = c.reviews_completed / pubs;
        c.invitations_per_publication = c.invitations_sent / pubs;
    }
    if (c.invitations_sent > 0) {
        c.reviewer_acceptance_rate =
            static_cast<double>(c.reviews_completed) / static_cast<double>(c.invitations_sent);
    }

    r.delay_days = {summarize(std::move(delay_all)), summarize(std::move(delay_peer))};
    r.attempts = {summarize(std::move(attempts_all)), summarize(std::move(attempts_peer))};
    r.quality_fit = {summarize(std::move(fit_all)), summarize(std::move(fit_peer))};
    r.utility = {summarize(std::move(util_all)), summarize(std::move(util_peer))};
    r.discounted_utility = {summarize(std::move(disc_all)), summarize(std::move(disc_peer))};
    r.all_acceptance_paper_quality = summarize(std::move(aa_quality));

    std::vector<double> jq_init, jq_start, jq_final, jq_change;
    for (const auto& j : ledger.journals) {
        if (j.all_acceptance) continue;
        jq_init.push_back(j.initial_quality);
        jq_start.push_back(j.starting_quality);
        jq_final.push_back(j.final_quality);
        jq_change.push_back(j.percent_change());
    }
    r.journal_initial_quality = summarize(std::move(jq_init));
    r.journal_starting_quality = summarize(std::move(jq_start));
    r.journal_final_quality = summarize(std::move(jq_final));
    r.journal_percent_change = summarize(std::move(jq_change));
    return r;
}

namespace {

std::string fmt(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

void stat_row(std::ostringstream& out, const std::string& label, const SummaryStats& s,
              int prec) {
    char buf[256];
    if (s.empty) {
        std::snprintf(buf, sizeof(buf), "  %-28s (no data)\n", label.c_str());
        out << buf;
        return;
    }
    std::snprintf(buf, sizeof(buf), "  %-28s %10.*f %10.*f %10.*f %10.*f %10.*f %10.*f %10.*f\n",
                  label.c_str(), prec, s.mean, prec, s.median, prec, s.min, prec, s.max, prec,
                  s.q1, prec, s.q3, prec, s.mad);
    out << buf;
}

void metric_rows(std::ostringstream& out, const std::string& label, const MetricBlock& m,
                 int prec) {
    stat_row(out, label, m.all, prec);
    stat_row(out, "  (excl. all-acceptance)", m.peer_reviewed_only, prec);
}

} // namespace

std::string render_report_text(const Report& report, const std::string& scenario_name) {
    const auto& c = report.counts;
    std::ostringstream out;
    out << "== simulation summary (" << scenario_name << ") ==\n";
    out << "Written papers          " << c.written_papers << "\n";
    out << "Publications\n";
    out << "  total                 " << c.publications_total << "  (" << fmt(c.pct_papers_published)
        << "% of papers)\n";
    out << "  peer-reviewed         " << c.publications_peer_reviewed << "  ("
        << fmt(c.pct_papers_peer_reviewed) << "% of papers, "
        << fmt(c.pct_publications_peer_reviewed) << "% of publications)\n";
    out << "  all-acceptance        " << c.publications_all_acceptance << "  ("
        << fmt(c.pct_papers_all_acceptance) << "% of papers, "
        << fmt(c.pct_publications_all_acceptance) << "% of publications)\n";
    out << "Reviews                 " << c.reviews_completed << "  (" << fmt(c.reviews_per_paper)
        << " per paper, " << fmt(c.reviews_per_publication) << " per publication)\n";
    out << "Review invitations      " << c.invitations_sent << "  (" << fmt(c.invitations_per_paper)
        << " per paper, " << fmt(c.invitations_per_publication) << " per publication)\n";
    out << "Reviewer acceptance rate " << fmt(100.0 * c.reviewer_acceptance_rate) << "%\n";
    out << "\nPublished papers              "
        << "      mean     median        min        max         q1         q3        mad\n";
    metric_rows(out, "publication delay [days]", report.delay_days, 2);
    metric_rows(out, "submission attempts", report.attempts, 2);
    metric_rows(out, "quality fit", report.quality_fit, 3);
    metric_rows(out, "utility", report.utility, 3);
    metric_rows(out, "discounted utility", report.discounted_utility, 3);
    stat_row(out, "all-acceptance paper quality", report.all_acceptance_paper_quality, 3);
    out << "\nJournal quality (excl. all-acceptance)\n";
    stat_row(out, "initial", report.journal_initial_quality, 3);
    stat_row(out, "starting (post-rampup)", report.journal_starting_quality, 3);
    stat_row(out, "final", report.journal_final_quality, 3);
    stat_row(out, "change [%]", report.journal_percent_change, 2);
    return out.str();
}

} // namespace pubsim
