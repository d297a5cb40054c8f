#include <benchmark/benchmark.h>

#include <vector>

#include "fragsat/decide.hpp"
#include "fragsat/fol.hpp"
#include "fragsat/gen.hpp"
#include "fragsat/surface.hpp"
#include "fragsat/vocab.hpp"

using namespace fragsat;

namespace {

std::vector<std::vector<Sentence>> pool(Fragment f, int s, int count) {
	GenParams p = default_params(f, s);
	std::vector<std::vector<Sentence>> out;
	out.reserve(static_cast<size_t>(count));
	for (int i = 0; i < count; ++i)
		out.push_back(generate_instance(f, p, static_cast<uint64_t>(i)).sentences);
	return out;
}

void BM_decide_graph(benchmark::State &state) {
	auto phis = pool(Fragment::SDag, static_cast<int>(state.range(0)), 256);
	size_t i = 0;
	for (auto _ : state) benchmark::DoNotOptimize(decide_graph(phis[i++ % phis.size()]));
}

void BM_decide_monadic(benchmark::State &state) {
	auto phis = pool(Fragment::SRelNeg, static_cast<int>(state.range(0)), 256);
	size_t i = 0;
	for (auto _ : state) benchmark::DoNotOptimize(decide_monadic(phis[i++ % phis.size()]));
}

void BM_oracle(benchmark::State &state) {
	auto phis = pool(Fragment::SDag, static_cast<int>(state.range(0)), 64);
	size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(bounded_model_search(phis[i++ % phis.size()], 4));
}

void BM_generate_instance(benchmark::State &state) {
	GenParams p = default_params(Fragment::RDag, static_cast<int>(state.range(0)));
	uint64_t seed = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(generate_instance(Fragment::RDag, p, seed++));
}

void BM_realize_parse(benchmark::State &state) {
	Vocabulary v = builtin_vocabulary("common");
	auto phis = pool(Fragment::SRelNeg, 20, 64);
	size_t i = 0;
	for (auto _ : state) {
		const auto &phi = phis[i++ % phis.size()];
		benchmark::DoNotOptimize(parse_instance(realize_instance(phi, v), v));
	}
}

void BM_to_tptp(benchmark::State &state) {
	auto phis = pool(Fragment::RDag, 30, 64);
	size_t i = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(to_tptp_anonymous(phis[i++ % phis.size()]));
}

} // namespace

BENCHMARK(BM_decide_graph)->Arg(15)->Arg(30)->Arg(60);
BENCHMARK(BM_decide_monadic)->Arg(15)->Arg(30);
BENCHMARK(BM_oracle)->Arg(6)->Arg(8);
BENCHMARK(BM_generate_instance)->Arg(20)->Arg(40);
BENCHMARK(BM_realize_parse);
BENCHMARK(BM_to_tptp);

BENCHMARK_MAIN();
