#include "pubsim/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pubsim {

using nlohmann::json;

std::string to_string(Scenario s) {
    return s == Scenario::status_quo ? "status_quo" : "daa";
}

Scenario scenario_from_string(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '-', '_');
    if (n == "status_quo") return Scenario::status_quo;
    if (n == "daa") return Scenario::daa;
    throw ConfigError("scenario: expected 'status_quo' or 'daa', got '" + name + "'");
}

namespace {

std::string skew_to_string(GumbelSkew s) {
    return s == GumbelSkew::right_max ? "right" : "left";
}

GumbelSkew skew_from_string(const std::string& name, const std::string& field) {
    if (name == "right") return GumbelSkew::right_max;
    if (name == "left") return GumbelSkew::left_min;
    throw ConfigError(field + ".skew: expected 'right' or 'left', got '" + name + "'");
}

json gumbel_to_json(const GumbelField& g) {
    return json{{"skew", skew_to_string(g.skew)}, {"lo", g.lo}, {"hi", g.hi}};
}

GumbelField gumbel_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) throw ConfigError(field + ": expected an object {skew, lo, hi}");
    GumbelField g;
    for (const auto& [key, value] : j.items()) {
        if (key == "skew") {
            g.skew = skew_from_string(value.get<std::string>(), field);
        } else if (key == "lo") {
            g.lo = value.get<double>();
        } else if (key == "hi") {
            g.hi = value.get<double>();
        } else {
            throw ConfigError(field + ": unknown key '" + key + "'");
        }
    }
    return g;
}

json config_to_json(const SimConfig& c) {
    return json{
        {"n_researchers", c.n_researchers},
        {"n_journals", c.n_journals},
        {"researcher_quality", gumbel_to_json(c.researcher_quality)},
        {"journal_quality", gumbel_to_json(c.journal_quality)},
        {"writing_days", gumbel_to_json(c.writing_days)},
        {"eta_resp_days", c.eta_resp_days},
        {"eta_rev_days", c.eta_rev_days},
        {"risk_aversion", c.risk_aversion},
        {"discount", c.discount},
        {"n_att", c.n_att},
        {"n_wait_years", c.n_wait_years},
        {"sigma_paper", c.sigma_paper},
        {"sigma_review", c.sigma_review},
        {"sigma_journal", c.sigma_journal},
        {"tolerance_fraction", c.tolerance_fraction},
        {"rampup_years", c.rampup_years},
        {"run_years", c.run_years},
        {"seed", c.seed},
        {"scenario", to_string(c.scenario)},
    };
}

SimConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    SimConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "n_researchers") c.n_researchers = value.get<int>();
            else if (key == "n_journals") c.n_journals = value.get<int>();
            else if (key == "researcher_quality") c.researcher_quality = gumbel_from_json(value, key);
            else if (key == "journal_quality") c.journal_quality = gumbel_from_json(value, key);
            else if (key == "writing_days") c.writing_days = gumbel_from_json(value, key);
            else if (key == "eta_resp_days") c.eta_resp_days = value.get<int>();
            else if (key == "eta_rev_days") c.eta_rev_days = value.get<int>();
            else if (key == "risk_aversion") c.risk_aversion = value.get<double>();
            else if (key == "discount") c.discount = value.get<double>();
            else if (key == "n_att") c.n_att = value.get<int>();
            else if (key == "n_wait_years") c.n_wait_years = value.get<int>();
            else if (key == "sigma_paper") c.sigma_paper = value.get<double>();
            else if (key == "sigma_review") c.sigma_review = value.get<double>();
            else if (key == "sigma_journal") c.sigma_journal = value.get<double>();
            else if (key == "tolerance_fraction") c.tolerance_fraction = value.get<double>();
            else if (key == "rampup_years") c.rampup_years = value.get<int>();
            else if (key == "run_years") c.run_years = value.get<int>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "scenario") c.scenario = scenario_from_string(value.get<std::string>());
            else throw ConfigError("unknown config key '" + key + "'");
        } catch (const json::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    return c;
}

void check_gumbel(const GumbelField& g, const std::string& field) {
    if (!(g.lo < g.hi)) {
        throw ConfigError(field + ": lo must be below hi");
    }
}

} // namespace

void SimConfig::validate() const {
    if (n_researchers < 1) throw ConfigError("n_researchers: must be at least 1");
    if (n_journals < 1) throw ConfigError("n_journals: must be at least 1");
    check_gumbel(researcher_quality, "researcher_quality");
    check_gumbel(journal_quality, "journal_quality");
    check_gumbel(writing_days, "writing_days");
    if (!(researcher_quality.lo >= 0.0 && researcher_quality.hi <= 1.0)) {
        throw ConfigError("researcher_quality: support must lie inside [0, 1]");
    }
    if (!(journal_quality.lo >= 0.0 && journal_quality.hi <= 1.0)) {
        throw ConfigError("journal_quality: support must lie inside [0, 1]");
    }
    if (!(writing_days.lo >= 0.0)) {
        throw ConfigError("writing_days: lo must be non-negative");
    }
    if (eta_resp_days < 1) throw ConfigError("eta_resp_days: must be a positive number of days");
    if (eta_rev_days < 1) throw ConfigError("eta_rev_days: must be a positive number of days");
    if (!(risk_aversion > 0.0)) throw ConfigError("risk_aversion: must be positive");
    if (!(discount >= 0.0 && discount <= 1.0)) throw ConfigError("discount: must lie in [0, 1]");
    if (n_att < 1) throw ConfigError("n_att: must be at least 1");
    if (n_wait_years < 1) throw ConfigError("n_wait_years: must be at least 1");
    if (!(sigma_paper > 0.0)) throw ConfigError("sigma_paper: must be positive");
    if (!(sigma_review > 0.0)) throw ConfigError("sigma_review: must be positive");
    if (!(sigma_journal > 0.0)) throw ConfigError("sigma_journal: must be positive");
    if (!(tolerance_fraction >= 0.0)) throw ConfigError("tolerance_fraction: must be non-negative");
    if (rampup_years < 0) throw ConfigError("rampup_years: must be non-negative");
    if (run_years < 0) throw ConfigError("run_years: must be non-negative");
}

SimConfig SimConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse failure: ") + e.what());
    }
    return config_from_json(j);
}

SimConfig SimConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void SimConfig::apply_override(const std::string& key, const std::string& value) {
    json j = config_to_json(*this);
    std::string pointer = "/" + key;
    std::replace(pointer.begin(), pointer.end(), '.', '/');
    json::json_pointer ptr(pointer);
    if (!j.contains(ptr)) {
        throw ConfigError("unknown config key '" + key + "'");
    }
    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::exception&) {
        parsed = value; // unquoted strings (e.g. scenario names) pass through
    }
    j[ptr] = parsed;
    *this = config_from_json(j);
}

std::string SimConfig::to_json_text(int indent) const {
    return config_to_json(*this).dump(indent);
}

} // namespace pubsim
