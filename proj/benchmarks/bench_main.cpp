#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <string>

#include "mcurve/bootstrap.hpp"
#include "mcurve/csa_engine.hpp"
#include "mcurve/replication.hpp"
#include "mcurve/risk_indices.hpp"
#include "mcurve/vol_converter.hpp"

using namespace mcurve;

namespace {

QuoteSet load(const char* name) {
    std::ifstream in(std::string(MCURVE_DATA_DIR) + "/" + name);
    return load_quotes(in);
}

void BM_BootstrapDiscount(benchmark::State& state) {
    const QuoteSet q = load("synthetic_2012-05-31.csv");
    const auto recipe = ois_recipe(q);
    for (auto _ : state) benchmark::DoNotOptimize(bootstrap_discount(q, recipe));
}
BENCHMARK(BM_BootstrapDiscount);

void BM_BootstrapForward6M(benchmark::State& state) {
    const QuoteSet q = load("synthetic_2012-05-31.csv");
    const Curve disc = bootstrap_discount(q, ois_recipe(q));
    const Period six = Period::parse("6M");
    const auto recipe = tenor_recipe(six, q);
    for (auto _ : state) benchmark::DoNotOptimize(bootstrap_forward(six, q, disc, recipe));
}
BENCHMARK(BM_BootstrapForward6M);

void BM_ReplicationReport(benchmark::State& state) {
    const QuoteSet q = load("eur_fra_2011-12-30.csv");
    for (auto _ : state) benchmark::DoNotOptimize(replication_report(q));
}
BENCHMARK(BM_ReplicationReport);

void BM_ImpliedVol(benchmark::State& state) {
    const double premium = black_atm_straddle_premium(0.02, 0.35, 5.0, 4.5);
    for (auto _ : state) benchmark::DoNotOptimize(implied_vol_from_premium(premium, 0.02, 5.0, 4.5));
}
BENCHMARK(BM_ImpliedVol);

void BM_TrimmedMean(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> spread(0.005, 0.05);
    PanelQuotes p{CivilDate::parse("2011-12-30"), {}};
    for (int i = 0; i < state.range(0); ++i) p.spreads["B" + std::to_string(i)] = spread(rng);
    for (auto _ : state) benchmark::DoNotOptimize(trimmed_mean_index(p));
}
BENCHMARK(BM_TrimmedMean)->Arg(20)->Arg(60);

void BM_Margination(benchmark::State& state) {
    DatedSeries rc;
    CivilDate d = CivilDate::parse("2012-01-02");
    for (int i = 0; i < state.range(0); ++i, d = d.add_days(1)) rc.push_back({d, 0.01 + 1e-5 * i});
    const DatedSeries npv = deterministic_npv_path(1e6, rc);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_margination(npv, rc));
}
BENCHMARK(BM_Margination)->Arg(250);

}  // namespace
BENCHMARK_MAIN();
