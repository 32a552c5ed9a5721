#include "phx/batch.hpp"
#include "phx/expressions.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

struct Workload {
    phx::GeneratingPolyhierarchy gp;
    std::vector<phx::Expression> outers;
    std::vector<phx::Expression> inners;
};

phx::SimpleCollection random_chain(std::mt19937_64& rng, const phx::GeneratingPolyhierarchy& gp, double p) {
    std::bernoulli_distribution use(p);
    std::vector<phx::Attribute> attrs;
    for (const auto& c : gp.criteria()) {
        if (!use(rng)) continue;
        std::uniform_int_distribution<std::uint32_t> branch(1, static_cast<std::uint32_t>(c.cardinality()));
        auto candidate = attrs;
        candidate.push_back({c.id, phx::BranchId{branch(rng)}, false});
        if (phx::validate(phx::SimpleCollection(candidate), gp).ok()) attrs = std::move(candidate);
    }
    return phx::SimpleCollection(std::move(attrs));
}

const Workload& workload() {
    static const Workload w = [] {
        Workload w;
        std::mt19937_64 rng(7);
        for (int i = 0; i < 30; ++i) {
            phx::Expression root = phx::Expression::universe();
            if (i > 0 && i % 3 == 0) root = phx::SimpleCollection({{phx::CriterionId{static_cast<std::uint32_t>(i - 2)}, phx::BranchId{1}, false}});
            const auto c = w.gp.add_criterion("K" + std::to_string(i + 1), phx::complete(*root.simple(), w.gp));
            for (int b = 1; b <= 4; ++b) w.gp.add_branch(c, std::to_string(b));
        }
        for (int k = 0; k < 100'000; ++k) {
            w.outers.emplace_back(random_chain(rng, w.gp, 0.1));
            w.inners.emplace_back(random_chain(rng, w.gp, 0.4));
        }
        return w;
    }();
    return w;
}

void BM_IncludesSerial(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) benchmark::DoNotOptimize(phx::includes_batch_serial(w.outers, w.inners, w.gp));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.outers.size()));
}

void BM_IncludesOpenMP(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) benchmark::DoNotOptimize(phx::includes_batch(w.outers, w.inners, w.gp));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.outers.size()));
}

} // namespace

BENCHMARK(BM_IncludesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncludesOpenMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
