#pragma once

#include "pubsim/distributions.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pubsim {

enum class Scenario { status_quo, daa };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GumbelField {
    GumbelSkew skew = GumbelSkew::right_max;
    double lo = 0.0;
    double hi = 1.0;
};

/// Every global knob of a run. Field names double as the JSON schema; unknown
/// keys in a config file are rejected.
struct SimConfig {
    int n_researchers = 12500;
    int n_journals = 100; // peer-reviewed journals; the all-acceptance venue is extra
    GumbelField researcher_quality{GumbelSkew::right_max, 0.0, 1.0};
    GumbelField journal_quality{GumbelSkew::right_max, 0.0, 1.0};
    GumbelField writing_days{GumbelSkew::left_min, 60.0, 500.0}; // ceiling-rounded to days
    int eta_resp_days = 20; // days to answer a review invitation
    int eta_rev_days = 70;  // days to deliver an accepted review
    double risk_aversion = 1.5;
    double discount = 0.9;
    int n_att = 6;        // attempt n_att always goes to the all-acceptance journal
    int n_wait_years = 35;
    double sigma_paper = 0.1;
    double sigma_review = 0.2;
    double sigma_journal = 0.05;
    double tolerance_fraction = 0.1;
    int rampup_years = 50;
    int run_years = 100;
    std::uint64_t seed = 1;
    Scenario scenario = Scenario::status_quo;

    void validate() const; // throws ConfigError with a field-level message

    static SimConfig from_json_text(const std::string& text);
    static SimConfig from_file(const std::string& path);

    /// Applies one "key=value" override; nested fields use dotted paths,
    /// e.g. "writing_days.lo=30".
    void apply_override(const std::string& key, const std::string& value);

    std::string to_json_text(int indent = 2) const;
};

} // namespace pubsim
