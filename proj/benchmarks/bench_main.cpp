#include <benchmark/benchmark.h>

#include "teamsem/parse.hpp"
#include "teamsem/representation.hpp"
#include "teamsem/rng.hpp"

using namespace teamsem;

namespace {

Signature sig_n(int n) {
    std::vector<std::string> vars{"p", "q", "r", "s"};
    vars.resize(static_cast<std::size_t>(n));
    return Signature(vars);
}

Formula mixed_formula(const Signature& sig) {
    std::string text = "(=(;" + sig.var(0) + ") | " + sig.var(0) + ")";
    for (std::size_t i = 1; i < sig.size(); ++i)
        text += " & (" + sig.var(i) + " | !" + sig.var(i) + ")";
    return parse(text, sig);
}

void BM_ModelsOf(benchmark::State& state) {
    Signature sig = sig_n(static_cast<int>(state.range(0)));
    Formula f = mixed_formula(sig);
    for (auto _ : state)
        benchmark::DoNotOptimize(models_of(f, sig, Logic::PDL).bits.count());
}
BENCHMARK(BM_ModelsOf)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_EvalTeamSplits(benchmark::State& state) {
    Signature sig = sig_n(4);
    std::vector<Valuation> members;
    for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(state.range(0)); ++v)
        members.push_back(Valuation{v});
    Team team(std::move(members));
    Formula f = mixed_formula(sig);
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_team(sig, team, f, Logic::PDL));
}
BENCHMARK(BM_EvalTeamSplits)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EnumerateClasses(benchmark::State& state) {
    Signature sig = sig_n(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(ClassIndex::enumerate(sig, Logic::PDL).size());
}
BENCHMARK(BM_EnumerateClasses)->Unit(benchmark::kMillisecond);

void BM_SynthesisTable(benchmark::State& state) {
    auto classes = enumerate_classes(sig_n(2), Logic::PDL);
    for (auto _ : state) {
        SynthesisTable table(*classes);
        benchmark::DoNotOptimize(table.generated());
    }
}
BENCHMARK(BM_SynthesisTable)->Unit(benchmark::kMillisecond);

void BM_CloseSeeded(benchmark::State& state) {
    auto classes = enumerate_classes(sig_n(2), Logic::PDL);
    Rng rng(5);
    std::vector<std::pair<std::size_t, std::size_t>> seeds;
    for (int i = 0; i < 3; ++i)
        seeds.emplace_back(rng.below(classes->size()), rng.below(classes->size()));
    for (auto _ : state)
        benchmark::DoNotOptimize(close(seeds, classes).pairs().size());
}
BENCHMARK(BM_CloseSeeded)->Unit(benchmark::kMillisecond);

void BM_AuditSemantic(benchmark::State& state) {
    auto classes = enumerate_classes(sig_n(2), Logic::PDL);
    EntailmentTable sem = EntailmentTable::semantic(classes);
    for (auto _ : state)
        benchmark::DoNotOptimize(audit(sem).pass());
}
BENCHMARK(BM_AuditSemantic)->Unit(benchmark::kMillisecond);

void BM_CanonicalModelRoundtrip(benchmark::State& state) {
    auto classes = enumerate_classes(sig_n(2), Logic::PDL);
    EntailmentTable t = close({{166, 1}, {100, 3}}, classes);
    for (auto _ : state) {
        RelationalModel m = build_klm_model(t);
        benchmark::DoNotOptimize(tabulate(m, classes) == t);
    }
}
BENCHMARK(BM_CanonicalModelRoundtrip)->Unit(benchmark::kMillisecond);

void BM_GenerateCumulativeModel(benchmark::State& state) {
    RandomModelParams params;
    params.require.cumulative = true;
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            generate_random_model(sig_n(2), Logic::PDL, params, ++seed).rejections);
}
BENCHMARK(BM_GenerateCumulativeModel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
