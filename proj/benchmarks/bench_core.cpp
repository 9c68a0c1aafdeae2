#include "pubsim/config.hpp"
#include "pubsim/distributions.hpp"
#include "pubsim/engine.hpp"
#include "pubsim/matching.hpp"
#include "pubsim/planner.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pubsim;

void BM_RegularizedIncompleteBeta(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(regularized_incomplete_beta(x, 1.32, 1.68));
        x += 1e-4;
        if (x > 0.9) x = 0.1;
    }
}
BENCHMARK(BM_RegularizedIncompleteBeta);

void BM_BoundedGumbelSample(benchmark::State& state) {
    Rng rng(1, RngStream::agent_creation);
    const auto spec = BoundedGumbelSpec::make(GumbelSkew::right_max, 0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounded_gumbel_sample(rng, spec));
    }
}
BENCHMARK(BM_BoundedGumbelSample);

void BM_TruncNormalSample(benchmark::State& state) {
    Rng rng(1, RngStream::paper_quality);
    const auto spec = TruncNormalSpec::make(0.32, 0.1, 0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trunc_normal_sample(rng, spec));
    }
}
BENCHMARK(BM_TruncNormalSample);

void BM_OptimalPlan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_plan(PlannerParams{1.5, 0.9, 8}));
    }
}
BENCHMARK(BM_OptimalPlan);

MatchingInstance typical_round(int n_papers, int n_journals) {
    Rng rng(7, RngStream::scheduler);
    MatchingInstance inst;
    std::vector<int> ranking(n_papers);
    for (int p = 0; p < n_papers; ++p) ranking[p] = p;
    rng.shuffle(ranking);
    std::vector<int> journal_ids(n_journals);
    for (int j = 0; j < n_journals; ++j) journal_ids[j] = j;
    for (int p = 0; p < n_papers; ++p) {
        auto prefs = journal_ids;
        rng.shuffle(prefs);
        inst.papers.push_back({p, prefs});
    }
    const int per = n_papers / n_journals;
    for (int j = 0; j < n_journals; ++j) {
        inst.journals.push_back({j, j == 0 ? n_papers - (n_journals - 1) * per : per, ranking});
    }
    return inst;
}

void BM_JournalOptimalMatching(benchmark::State& state) {
    const auto inst = typical_round(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_journal_optimal(inst));
    }
}
BENCHMARK(BM_JournalOptimalMatching)->Arg(14)->Arg(110);

void BM_SimulatedDay(benchmark::State& state) {
    SimConfig cfg;
    cfg.n_researchers = 1250;
    cfg.n_journals = 10;
    cfg.rampup_years = 0;
    cfg.run_years = 1;
    cfg.seed = 3;
    World w = initialize_world(cfg);
    for (int d = 0; d < 120; ++d) advance_day(w); // warm the pipeline
    for (auto _ : state) {
        advance_day(w);
    }
}
BENCHMARK(BM_SimulatedDay)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
