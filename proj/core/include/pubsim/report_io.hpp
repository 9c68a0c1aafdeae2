#pragma once

#include "pubsim/config.hpp"
#include "pubsim/metrics.hpp"

#include <filesystem>
#include <string>

namespace pubsim {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Deterministic JSON rendering of a report plus the config echo. Equal
/// (report, config) inputs produce byte-identical text.
std::string summary_json_text(const Report& report, const SimConfig& cfg);

/// Writes summary.json, publications.csv and journals.csv into dir
/// (UTF-8, LF line endings, '.' decimal separator, full double precision).
void write_run_outputs(const std::filesystem::path& dir, const Report& report,
                       const MetricsLedger& ledger, const SimConfig& cfg);

/// Reloads a persisted run: per-publication and per-journal records from the
/// CSV files, raw counters and the config echo from summary.json.
struct PersistedRun {
    MetricsLedger ledger;
    std::string config_json; // config object exactly as persisted
    std::string scenario;
};
PersistedRun load_run(const std::filesystem::path& dir);

/// Rebuilds summary.json from the persisted CSV records; bit-identical to
/// the original for an untouched run directory.
std::string regenerate_summary_text(const std::filesystem::path& dir);

} // namespace pubsim
