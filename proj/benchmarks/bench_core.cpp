#include <benchmark/benchmark.h>

#include "colorheis/nogo.hpp"
#include "colorheis/polyop.hpp"
#include "colorheis/realization.hpp"

using namespace colorheis;

namespace {

void BM_ParitySquare(benchmark::State &state)
{
	int window = static_cast<int>(state.range(0));
	NormalSeries t = t_series(window);
	for (auto _ : state)
	{
		NormalSeries sq = mul(t, t);
		benchmark::DoNotOptimize(sq);
	}
	state.SetComplexityN(window);
}
BENCHMARK(BM_ParitySquare)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_BuildThreeRel(benchmark::State &state)
{
	int window = static_cast<int>(state.range(0));
	ASeries phi = ASeries::from_pairs({{1, 1}, {3, GaussianRational(
	                                                  Rational(-1, 2))}});
	ASeries psi = ASeries::from_pairs({{5, GaussianRational(Rational(2, 3))}});
	for (auto _ : state)
	{
		Realization r = build_three_rel(GaussianRational(1), phi, psi, window);
		benchmark::DoNotOptimize(r);
	}
}
BENCHMARK(BM_BuildThreeRel)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyRelations(benchmark::State &state)
{
	int window = static_cast<int>(state.range(0));
	ASeries phi = ASeries::from_pairs({{1, 1}});
	ASeries psi = ASeries::from_pairs({{3, -1}});
	Realization r = build_three_rel(GaussianRational(1), phi, psi, window);
	for (auto _ : state)
	{
		ResidualReport rep = verify_relations(r, window - 1);
		benchmark::DoNotOptimize(rep);
	}
}
BENCHMARK(BM_VerifyRelations)->Arg(8)->Arg(12)->Arg(16);

void BM_NoGo(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	for (auto _ : state)
	{
		NoGoReport rep = polynomial_nogo(n, n, 12);
		benchmark::DoNotOptimize(rep);
	}
}
BENCHMARK(BM_NoGo)->DenseRange(2, 8, 2);

void BM_ApplySeries(benchmark::State &state)
{
	int deg = static_cast<int>(state.range(0));
	NormalSeries t = t_series(deg);
	Poly p = Poly::monomial(deg, GaussianRational(Rational(3, 7)));
	for (auto _ : state)
	{
		Poly out = apply_series(t, p);
		benchmark::DoNotOptimize(out);
	}
}
BENCHMARK(BM_ApplySeries)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
