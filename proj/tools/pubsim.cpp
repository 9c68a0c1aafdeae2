#include "pubsim/config.hpp"
#include "pubsim/engine.hpp"
#include "pubsim/metrics.hpp"
#include "pubsim/planner.hpp"
#include "pubsim/report_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct SetOption {
    std::string key;
    std::string value;
};

std::vector<SetOption> parse_set_options(const std::vector<std::string>& raw) {
    std::vector<SetOption> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw pubsim::ConfigError("--set expects key=value, got '" + item + "'");
        }
        out.push_back(SetOption{item.substr(0, eq), item.substr(eq + 1)});
    }
    return out;
}

pubsim::SimConfig load_config(const std::string& path, const std::vector<SetOption>& overrides,
                              const std::optional<std::uint64_t>& seed,
                              const std::optional<std::string>& scenario) {
    pubsim::SimConfig cfg = pubsim::SimConfig::from_file(path);
    for (const auto& s : overrides) cfg.apply_override(s.key, s.value);
    if (seed) cfg.seed = *seed;
    if (scenario) cfg.scenario = pubsim::scenario_from_string(*scenario);
    cfg.validate();
    return cfg;
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit_plan_csv(std::ostream& out, double r, double beta, int n) {
    const pubsim::SubmissionPlan plan = pubsim::optimal_plan(pubsim::PlannerParams{r, beta, n});
    for (int i = 0; i < n; ++i) {
        out << format_g(r) << ',' << format_g(beta) << ',' << n << ',' << (i + 1) << ','
            << format_g(plan.probs[i]) << ',' << format_g(plan.values[i]) << '\n';
    }
}

int cmd_plan(const std::optional<double>& r, const std::optional<double>& beta,
             const std::optional<int>& n) {
    std::ostringstream out;
    out << "r,beta,n,period,p_star,u_star\n";
    if (r || beta || n) {
        try {
            emit_plan_csv(out, r.value_or(1.5), beta.value_or(0.9), n.value_or(8));
        } catch (const std::invalid_argument& e) {
            throw pubsim::ConfigError(e.what());
        }
    } else {
        // Default grid: risk-aversion panel at discount 0.9, then discount
        // panel at risk aversion 2, both over an 8-period horizon.
        for (const double rv : {1.5, 2.0, 3.0}) emit_plan_csv(out, rv, 0.9, 8);
        for (const double bv : {0.7, 0.9, 1.0}) emit_plan_csv(out, 2.0, bv, 8);
    }
    std::cout << out.str();
    return kExitOk;
}

int cmd_run(const std::string& config_path, const std::vector<SetOption>& overrides,
            const std::optional<std::uint64_t>& seed, const std::optional<std::string>& scenario,
            const std::string& out_dir) {
    const pubsim::SimConfig cfg = load_config(config_path, overrides, seed, scenario);
    const pubsim::MetricsLedger ledger = pubsim::run(cfg);
    const pubsim::Report report = pubsim::build_report(ledger);
    pubsim::write_run_outputs(out_dir, report, ledger, cfg);
    std::cout << pubsim::render_report_text(report, pubsim::to_string(cfg.scenario));
    std::cout << "outputs written to " << out_dir << "\n";
    return kExitOk;
}

int cmd_report(const std::string& out_dir) {
    const std::string summary = pubsim::regenerate_summary_text(out_dir);
    {
        std::ofstream out(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
        if (!out) throw pubsim::IoError("cannot rewrite summary.json in " + out_dir);
        out << summary;
    }
    const pubsim::PersistedRun run = pubsim::load_run(out_dir);
    std::cout << pubsim::render_report_text(pubsim::build_report(run.ledger), run.scenario);
    return kExitOk;
}

struct GridAxis {
    std::string key;
    std::vector<std::string> values;
};

std::vector<GridAxis> parse_grid(const std::vector<std::string>& raw) {
    std::vector<GridAxis> axes;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw pubsim::ConfigError("--grid expects key=v1,v2,..., got '" + item + "'");
        }
        GridAxis axis;
        axis.key = item.substr(0, eq);
        std::istringstream values(item.substr(eq + 1));
        std::string v;
        while (std::getline(values, v, ',')) axis.values.push_back(v);
        if (axis.values.empty()) {
            throw pubsim::ConfigError("--grid axis '" + axis.key + "' has no values");
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

struct SweepRow {
    std::string dir;
    std::string status = "ok";
    std::uint64_t seed = 0;
    std::string scenario;
    std::vector<std::string> grid_values;
    pubsim::ReportCounts counts;
    double delay_mean = 0, delay_median = 0, attempts_mean = 0;
    double fit_mean = 0, utility_mean = 0, discounted_mean = 0;
};

int cmd_sweep(const std::string& config_path, const std::vector<SetOption>& overrides,
              const std::vector<GridAxis>& axes, std::vector<std::uint64_t> seeds,
              const std::optional<std::string>& scenario, const std::string& out_dir,
              unsigned jobs) {
    const pubsim::SimConfig base = load_config(config_path, overrides, std::nullopt, scenario);
    if (seeds.empty()) seeds.push_back(base.seed);

    // Cartesian expansion, axes in flag order, seeds innermost.
    std::vector<std::vector<std::string>> points{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<std::string>> next;
        for (const auto& point : points) {
            for (const auto& value : axis.values) {
                auto extended = point;
                extended.push_back(value);
                next.push_back(std::move(extended));
            }
        }
        points = std::move(next);
    }

    struct Job {
        std::vector<std::string> grid_values;
        std::uint64_t seed;
    };
    std::vector<Job> jobs_list;
    for (const auto& point : points) {
        for (const auto seed : seeds) jobs_list.push_back(Job{point, seed});
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw pubsim::IoError("cannot create sweep directory " + out_dir);

    std::vector<SweepRow> rows(jobs_list.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= jobs_list.size()) return;
            const Job& job = jobs_list[i];
            SweepRow& row = rows[i];
            row.seed = job.seed;
            row.grid_values = job.grid_values;
            char name[64];
            std::snprintf(name, sizeof(name), "run_%03zu_seed%llu", i,
                          static_cast<unsigned long long>(job.seed));
            row.dir = name;
            try {
                pubsim::SimConfig cfg = base;
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    cfg.apply_override(axes[a].key, job.grid_values[a]);
                }
                cfg.seed = job.seed;
                cfg.validate();
                row.scenario = pubsim::to_string(cfg.scenario);
                const pubsim::MetricsLedger ledger = pubsim::run(cfg);
                const pubsim::Report report = pubsim::build_report(ledger);
                pubsim::write_run_outputs(std::filesystem::path(out_dir) / row.dir, report,
                                          ledger, cfg);
                row.counts = report.counts;
                row.delay_mean = report.delay_days.all.mean;
                row.delay_median = report.delay_days.all.median;
                row.attempts_mean = report.attempts.all.mean;
                row.fit_mean = report.quality_fit.all.mean;
                row.utility_mean = report.utility.all.mean;
                row.discounted_mean = report.discounted_utility.all.mean;
            } catch (const std::exception& e) {
                row.status = std::string("failed: ") + e.what();
            }
        }
    };

    const unsigned n_workers =
        std::max(1u, std::min<unsigned>(jobs ? jobs : std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(jobs_list.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "run_dir,status,seed,scenario";
    for (const auto& axis : axes) csv << ',' << axis.key;
    csv << ",written_papers,publications_total,publications_peer_reviewed,"
           "publications_all_acceptance,pct_publications_all_acceptance,"
           "reviews_per_publication,invitations_per_publication,reviewer_acceptance_rate,"
           "delay_mean,delay_median,attempts_mean,quality_fit_mean,utility_mean,"
           "discounted_utility_mean\n";
    bool any_failed = false;
    for (const auto& row : rows) {
        if (row.status != "ok") any_failed = true;
        csv << row.dir << ',' << row.status << ',' << row.seed << ',' << row.scenario;
        for (const auto& v : row.grid_values) csv << ',' << v;
        csv << ',' << row.counts.written_papers << ',' << row.counts.publications_total << ','
            << row.counts.publications_peer_reviewed << ','
            << row.counts.publications_all_acceptance << ','
            << format_g(row.counts.pct_publications_all_acceptance) << ','
            << format_g(row.counts.reviews_per_publication) << ','
            << format_g(row.counts.invitations_per_publication) << ','
            << format_g(row.counts.reviewer_acceptance_rate) << ',' << format_g(row.delay_mean)
            << ',' << format_g(row.delay_median) << ',' << format_g(row.attempts_mean) << ','
            << format_g(row.fit_mean) << ',' << format_g(row.utility_mean) << ','
            << format_g(row.discounted_mean) << '\n';
    }
    {
        std::ofstream out(std::filesystem::path(out_dir) / "sweep.csv", std::ios::binary);
        if (!out) throw pubsim::IoError("cannot write sweep.csv in " + out_dir);
        out << csv.str();
    }
    std::cout << "sweep finished: " << jobs_list.size() << " runs, outputs in " << out_dir << "\n";
    return any_failed ? kExitFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"agent-based simulator of the academic publication market"};
    app.require_subcommand(1);

    // plan
    auto* plan = app.add_subcommand("plan", "emit optimal submission plans as CSV");
    std::optional<double> plan_r, plan_beta;
    std::optional<int> plan_n;
    plan->add_option("--r", plan_r, "relative risk aversion");
    plan->add_option("--beta", plan_beta, "per-period discount factor");
    plan->add_option("--n", plan_n, "number of submission periods");

    // shared run/sweep options
    std::string config_path;
    std::vector<std::string> set_options;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> scenario;
    std::string out_dir = "out";

    auto* run_cmd = app.add_subcommand("run", "run one scenario and write its outputs");
    run_cmd->add_option("--config", config_path, "config file (JSON)")->required();
    run_cmd->add_option("--seed", seed, "seed override");
    run_cmd->add_option("--scenario", scenario, "status-quo|daa");
    run_cmd->add_option("--out", out_dir, "output directory");
    run_cmd->add_option("--set", set_options, "config override key=value (repeatable)");

    auto* sweep = app.add_subcommand("sweep", "run a parameter grid across seeds");
    std::vector<std::string> grid_options;
    std::vector<std::uint64_t> sweep_seeds;
    unsigned sweep_jobs = 0;
    sweep->add_option("--config", config_path, "config file (JSON)")->required();
    sweep->add_option("--grid", grid_options, "grid axis key=v1,v2,... (repeatable)");
    sweep->add_option("--seeds", sweep_seeds, "seeds to replicate over")->delimiter(',');
    sweep->add_option("--scenario", scenario, "status-quo|daa");
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--set", set_options, "config override key=value (repeatable)");
    sweep->add_option("--jobs", sweep_jobs, "max parallel runs (default: hardware threads)");

    auto* report = app.add_subcommand("report", "rebuild the summary of a persisted run");
    report->add_option("--out", out_dir, "run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (plan->parsed()) return cmd_plan(plan_r, plan_beta, plan_n);
        const auto overrides = parse_set_options(set_options);
        if (run_cmd->parsed()) return cmd_run(config_path, overrides, seed, scenario, out_dir);
        if (sweep->parsed()) {
            return cmd_sweep(config_path, overrides, parse_grid(grid_options), sweep_seeds,
                             scenario, out_dir, sweep_jobs);
        }
        if (report->parsed()) return cmd_report(out_dir);
    } catch (const pubsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const pubsim::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitConfig;
}
