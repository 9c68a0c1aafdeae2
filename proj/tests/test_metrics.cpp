#include "pubsim/metrics.hpp"

#include "pubsim/config.hpp"
#include "pubsim/report_io.hpp"
#include "pubsim/rng.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace pubsim;

namespace {

MetricsLedger synthetic_ledger() {
    MetricsLedger ledger;
    ledger.written_papers = 10;
    ledger.invitations_sent = 40;
    ledger.reviews_completed = 18;
    ledger.publications = {
        PublicationRecord{0, 2, false, 120, 2, 0.91, 0.45, 0.405, 0.42},
        PublicationRecord{1, 0, true, 300, 6, 0.86, 0.0, 0.0, 0.14},
        PublicationRecord{2, 1, false, 89, 1, 0.97, 0.52, 0.52, 0.33},
        PublicationRecord{3, 2, false, 214, 3, 0.77, 0.38, 0.3078, 0.51},
    };
    ledger.journals = {
        JournalRow{0, true, 0.0, 0.0, 0.0, 1},
        JournalRow{1, false, 0.30, 0.28, 0.27, 1},
        JournalRow{2, false, 0.55, 0.52, 0.54, 2},
    };
    return ledger;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("summary statistics on a hand-computable list") {
    const SummaryStats s = summarize({1, 2, 3, 4, 5});
    CHECK_FALSE(s.empty);
    CHECK(s.count == 5);
    CHECK(s.mean == doctest::Approx(3.0));
    CHECK(s.median == 3.0);
    CHECK(s.min == 1.0);
    CHECK(s.max == 5.0);
    CHECK(s.q1 == 2.0);
    CHECK(s.q3 == 4.0);
    CHECK(s.mad == 1.0);
}

TEST_CASE("summary statistics of a constant list collapse") {
    const SummaryStats s = summarize({0.7, 0.7, 0.7});
    CHECK(s.mean == doctest::Approx(0.7));
    CHECK(s.median == 0.7);
    CHECK(s.q1 == 0.7);
    CHECK(s.q3 == 0.7);
    CHECK(s.mad == 0.0);
}

TEST_CASE("summary statistics use the lower median on even counts") {
    const SummaryStats s = summarize({4, 1, 3, 2});
    CHECK(s.median == 2.0);
    CHECK(s.q1 == 1.0);
    CHECK(s.q3 == 3.0);
}

TEST_CASE("summary of uniform samples lands near the theoretical median") {
    Rng rng(55, RngStream::scheduler);
    std::vector<double> values;
    values.reserve(10000);
    for (int i = 0; i < 10000; ++i) values.push_back(rng.uniform01_open());
    const SummaryStats s = summarize(std::move(values));
    CHECK(std::fabs(s.median - 0.5) < 0.02);
    CHECK(std::fabs(s.mean - 0.5) < 0.02);
}

TEST_CASE("empty input produces the explicit empty marker") {
    const SummaryStats s = summarize({});
    CHECK(s.empty);
    CHECK(s.count == 0);
}

TEST_CASE("report over a single all-acceptance publication") {
    MetricsLedger ledger;
    ledger.written_papers = 1;
    ledger.publications = {PublicationRecord{0, 0, true, 5, 6, 0.9, 0.0, 0.0, 0.1}};
    const Report r = build_report(ledger);
    CHECK(r.counts.publications_total == 1);
    CHECK(r.counts.publications_peer_reviewed == 0);
    CHECK(r.counts.pct_publications_peer_reviewed == doctest::Approx(0.0));
    CHECK(r.counts.pct_publications_all_acceptance == doctest::Approx(100.0));
    CHECK(r.delay_days.peer_reviewed_only.empty);
    CHECK_FALSE(r.delay_days.all.empty);
}

TEST_CASE("report counts stay conserved and consistent") {
    const MetricsLedger ledger = synthetic_ledger();
    const Report r = build_report(ledger);
    CHECK(r.counts.publications_total ==
          r.counts.publications_peer_reviewed + r.counts.publications_all_acceptance);
    CHECK(r.counts.publications_total <= r.counts.written_papers);
    CHECK(r.counts.reviews_per_publication == doctest::Approx(18.0 / 4.0));
    CHECK(r.counts.invitations_per_publication == doctest::Approx(10.0));
    CHECK(r.counts.reviewer_acceptance_rate == doctest::Approx(18.0 / 40.0));
}

TEST_CASE("journal percent change follows the definition") {
    const JournalRow row{5, false, 0.5, 0.40, 0.42, 12};
    CHECK(row.percent_change() == doctest::Approx((0.42 - 0.40) / 0.40 * 100.0));
}

TEST_CASE("run outputs regenerate bit-identically from the persisted ledger") {
    const MetricsLedger ledger = synthetic_ledger();
    const Report report = build_report(ledger);
    SimConfig cfg;
    cfg.n_researchers = 10;
    cfg.n_journals = 2;

    const auto dir = std::filesystem::path("metrics_io_tmp");
    std::filesystem::remove_all(dir);
    write_run_outputs(dir, report, ledger, cfg);

    const std::string original = slurp(dir / "summary.json");
    CHECK(original == summary_json_text(report, cfg));

    const PersistedRun reloaded = load_run(dir);
    CHECK(reloaded.ledger == ledger);

    const std::string regenerated = regenerate_summary_text(dir);
    CHECK(regenerated == original);
    std::filesystem::remove_all(dir);
}

TEST_CASE("rendered text carries the same scalars as the report") {
    const Report r = build_report(synthetic_ledger());
    const std::string text = render_report_text(r, "status_quo");
    CHECK(text.find("Written papers          10") != std::string::npos);
    CHECK(text.find("Reviewer acceptance rate 45.00%") != std::string::npos);
}

TEST_SUITE_END();
