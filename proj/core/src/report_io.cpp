#include "pubsim/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pubsim {

using nlohmann::json;

namespace {

json stats_to_json(const SummaryStats& s) {
    if (s.empty) return json{{"count", 0}};
    return json{{"count", s.count}, {"mean", s.mean}, {"median", s.median}, {"min", s.min},
                {"max", s.max},     {"q1", s.q1},     {"q3", s.q3},         {"mad", s.mad}};
}

json metric_to_json(const MetricBlock& m) {
    return json{{"all", stats_to_json(m.all)},
                {"excluding_all_acceptance", stats_to_json(m.peer_reviewed_only)}};
}

json report_to_json(const Report& r, const json& config_echo) {
    const auto& c = r.counts;
    return json{
        {"config", config_echo},
        {"counts",
         json{{"written_papers", c.written_papers},
              {"publications_total", c.publications_total},
              {"publications_peer_reviewed", c.publications_peer_reviewed},
              {"publications_all_acceptance", c.publications_all_acceptance},
              {"reviews_completed", c.reviews_completed},
              {"invitations_sent", c.invitations_sent},
              {"pct_papers_published", c.pct_papers_published},
              {"pct_papers_peer_reviewed", c.pct_papers_peer_reviewed},
              {"pct_papers_all_acceptance", c.pct_papers_all_acceptance},
              {"pct_publications_peer_reviewed", c.pct_publications_peer_reviewed},
              {"pct_publications_all_acceptance", c.pct_publications_all_acceptance},
              {"reviews_per_paper", c.reviews_per_paper},
              {"reviews_per_publication", c.reviews_per_publication},
              {"invitations_per_paper", c.invitations_per_paper},
              {"invitations_per_publication", c.invitations_per_publication},
              {"reviewer_acceptance_rate", c.reviewer_acceptance_rate}}},
        {"published_papers",
         json{{"publication_delay_days", metric_to_json(r.delay_days)},
              {"submission_attempts", metric_to_json(r.attempts)},
              {"quality_fit", metric_to_json(r.quality_fit)},
              {"utility", metric_to_json(r.utility)},
              {"discounted_utility", metric_to_json(r.discounted_utility)},
              {"all_acceptance_paper_quality", stats_to_json(r.all_acceptance_paper_quality)}}},
        {"journal_quality", json{{"initial", stats_to_json(r.journal_initial_quality)},
                                 {"starting", stats_to_json(r.journal_starting_quality)},
                                 {"final", stats_to_json(r.journal_final_quality)},
                                 {"percent_change", stats_to_json(r.journal_percent_change)}}},
    };
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoError("write failure: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

} // namespace

std::string summary_json_text(const Report& report, const SimConfig& cfg) {
    const json config_echo = json::parse(cfg.to_json_text());
    return report_to_json(report, config_echo).dump(2) + "\n";
}

void write_run_outputs(const std::filesystem::path& dir, const Report& report,
                       const MetricsLedger& ledger, const SimConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

    write_text_file(dir / "summary.json", summary_json_text(report, cfg));

    std::ostringstream pubs;
    pubs << "paper_id,journal_id,all_acceptance,delay_days,attempts,quality_fit,utility,"
            "discounted_utility,paper_quality\n";
    for (const auto& p : ledger.publications) {
        pubs << p.paper_id << ',' << p.journal_id << ',' << (p.all_acceptance ? 1 : 0) << ','
             << p.delay_days << ',' << p.attempts << ',' << format_double(p.quality_fit) << ','
             << format_double(p.utility) << ',' << format_double(p.discounted_utility) << ','
             << format_double(p.paper_quality) << '\n';
    }
    write_text_file(dir / "publications.csv", pubs.str());

    std::ostringstream journals;
    journals << "journal_id,all_acceptance,initial_quality,starting_quality,final_quality,"
                "accepted_count,percent_change\n";
    for (const auto& j : ledger.journals) {
        journals << j.id << ',' << (j.all_acceptance ? 1 : 0) << ','
                 << format_double(j.initial_quality) << ',' << format_double(j.starting_quality)
                 << ',' << format_double(j.final_quality) << ',' << j.accepted_count << ','
                 << format_double(j.all_acceptance ? 0.0 : j.percent_change()) << '\n';
    }
    write_text_file(dir / "journals.csv", journals.str());
}

PersistedRun load_run(const std::filesystem::path& dir) {
    PersistedRun run;

    json summary;
    try {
        summary = json::parse(read_text_file(dir / "summary.json"));
    } catch (const json::exception& e) {
        throw ConfigError("summary.json parse failure: " + std::string(e.what()));
    }
    try {
        run.config_json = summary.at("config").dump();
        run.scenario = summary.at("config").at("scenario").get<std::string>();
        const auto& counts = summary.at("counts");
        run.ledger.written_papers = counts.at("written_papers").get<std::uint64_t>();
        run.ledger.invitations_sent = counts.at("invitations_sent").get<std::uint64_t>();
        run.ledger.reviews_completed = counts.at("reviews_completed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw ConfigError("summary.json: unexpected layout: " + std::string(e.what()));
    }

    try {
        std::istringstream in(read_text_file(dir / "publications.csv"));
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto f = split_csv_line(line);
            if (f.size() != 9) throw ConfigError("publications.csv: malformed row");
            PublicationRecord rec;
            rec.paper_id = std::stoi(f[0]);
            rec.journal_id = std::stoi(f[1]);
            rec.all_acceptance = f[2] == "1";
            rec.delay_days = std::stoi(f[3]);
            rec.attempts = std::stoi(f[4]);
            rec.quality_fit = std::stod(f[5]);
            rec.utility = std::stod(f[6]);
            rec.discounted_utility = std::stod(f[7]);
            rec.paper_quality = std::stod(f[8]);
            run.ledger.publications.push_back(rec);
        }
    } catch (const std::logic_error&) {
        throw ConfigError("publications.csv: malformed row");
    }

    try {
        std::istringstream in(read_text_file(dir / "journals.csv"));
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto f = split_csv_line(line);
            if (f.size() != 7) throw ConfigError("journals.csv: malformed row");
            JournalRow row;
            row.id = std::stoi(f[0]);
            row.all_acceptance = f[1] == "1";
            row.initial_quality = std::stod(f[2]);
            row.starting_quality = std::stod(f[3]);
            row.final_quality = std::stod(f[4]);
            row.accepted_count = std::stol(f[5]);
            run.ledger.journals.push_back(row);
        }
    } catch (const std::logic_error&) {
        throw ConfigError("journals.csv: malformed row");
    }

    return run;
}

std::string regenerate_summary_text(const std::filesystem::path& dir) {
    const PersistedRun run = load_run(dir);
    const Report report = build_report(run.ledger);
    const json config_echo = json::parse(run.config_json);
    return report_to_json(report, config_echo).dump(2) + "\n";
}

} // namespace pubsim
