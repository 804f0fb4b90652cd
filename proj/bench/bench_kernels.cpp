// Serial reference vs OpenMP kernels on the n = 1000 / 10^5 poll models.

#include "valpred/kernels.hpp"
#include "valpred/nonresponse.hpp"
#include "valpred/outcome_model.hpp"
#include "valpred/plausibility.hpp"

#include <benchmark/benchmark.h>

namespace {

const valpred::JointModel& model_for(std::int64_t n)
{
    static const auto small = valpred::binomial_flat_joint({10.0, 1000});
    static const auto large = valpred::binomial_flat_joint({10.0, 100000});
    return n <= 1000 ? small : large;
}

template <auto Kernel>
void BM_Miscoverage(benchmark::State& state)
{
    const auto& model = model_for(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(model, 0.05));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(model.pair_count()));
}

template <auto Kernel>
void BM_Attained(benchmark::State& state)
{
    const auto& model = model_for(state.range(0));
    for (auto _ : state) {
        auto v = Kernel(model);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(model.pair_count()));
}

template <auto Kernel>
void BM_MonteCarlo(benchmark::State& state)
{
    const auto& model = model_for(1000);
    const auto trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(model, 0.05, trials, 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Plausibility(benchmark::State& state)
{
    static const valpred::PollData poll{1000, {{"C", 475}, {"T", 425}}, 100};
    static const auto ensemble = valpred::imputation_ensemble(poll, {10.0, 1000}, 2);
    static const auto upper = ensemble.upper_table();
    for (auto _ : state) {
        for (const auto& m : ensemble.members()) {
            benchmark::DoNotOptimize(Kernel(m, upper, 0.05));
        }
    }
}

} // namespace

BENCHMARK(BM_Miscoverage<valpred::reference::miscoverage_at>)->Name("miscoverage/reference")->Arg(1000)->Arg(100000);
BENCHMARK(BM_Miscoverage<valpred::omp::miscoverage_at>)->Name("miscoverage/omp")->Arg(1000)->Arg(100000);
BENCHMARK(BM_Miscoverage<valpred::reference::set_miscoverage>)->Name("set_miscoverage/reference")->Arg(100000);
BENCHMARK(BM_Miscoverage<valpred::omp::set_miscoverage>)->Name("set_miscoverage/omp")->Arg(100000);
BENCHMARK(BM_Attained<valpred::reference::attained_values>)->Name("attained/reference")->Arg(1000)->Arg(100000);
BENCHMARK(BM_Attained<valpred::omp::attained_values>)->Name("attained/omp")->Arg(1000)->Arg(100000);
BENCHMARK(BM_MonteCarlo<valpred::reference::monte_carlo_misses>)->Name("monte_carlo/reference")->Arg(100000);
BENCHMARK(BM_MonteCarlo<valpred::omp::monte_carlo_misses>)->Name("monte_carlo/omp")->Arg(100000);
BENCHMARK(BM_Plausibility<valpred::reference::plausibility_set_miscoverage>)->Name("plausibility/reference");
BENCHMARK(BM_Plausibility<valpred::omp::plausibility_set_miscoverage>)->Name("plausibility/omp");

BENCHMARK_MAIN();
