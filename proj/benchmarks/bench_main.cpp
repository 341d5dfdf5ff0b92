#include "oddref/diffop.hpp"
#include "oddref/qchar11.hpp"
#include "oddref/reflection.hpp"
#include "oddref/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace oddref;

namespace {

const RatB one;

// (prod (u - k) / prod (u - k - 1/2), 1) for k = 0..roots-1
LWeight gl11_weight(int roots)
{
    std::vector<Rational> phi, psi;
    for (int k = 0; k < roots; ++k) {
        phi.emplace_back(k);
        psi.emplace_back(2 * k + 1, 2);
    }
    return {ParitySeq({1, -1}), {RatB(FactoredPoly(phi), FactoredPoly(psi)), one}};
}

void BM_EnumerateSsyt(benchmark::State& state)
{
    const ParitySeq s({1, -1, 1, -1});
    const SkewDiagram d(Partition({5, 3, 3, 3, 3}), Partition({3, 3, 2, 2}));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_ssyt(s, d));
}
BENCHMARK(BM_EnumerateSsyt);

void BM_CountSsyt(benchmark::State& state)
{
    const ParitySeq s = ParitySeq::standard(3, 2);
    const SkewDiagram d(Partition({4, 4, 3, 1}), Partition({2, 1}));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_ssyt(s, d));
}
BENCHMARK(BM_CountSsyt);

void BM_SkewQChar(benchmark::State& state)
{
    const ParitySeq s({1, -1, 1});
    const SkewDiagram d(Partition({4, 3, 2}), Partition({2}));
    for (auto _ : state)
        benchmark::DoNotOptimize(skew_qchar(s, d));
}
BENCHMARK(BM_SkewQChar);

void BM_Reflect(benchmark::State& state)
{
    const ParitySeq s({1, 1, -1, -1, 1});
    std::vector<RatB> comps;
    for (int j = 0; j < s.size(); ++j)
        comps.emplace_back(FactoredPoly{Rational(j), Rational(-j, 3)}, FactoredPoly{Rational(j + 2), Rational(1, 2)});
    const LWeight z(s, comps);
    for (auto _ : state)
        benchmark::DoNotOptimize(reflect(z, Node(2)));
}
BENCHMARK(BM_Reflect);

void BM_QCharReflect(benchmark::State& state)
{
    const QChar c = qchar_gl11(gl11_weight(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(qchar_reflect_gl11(c));
}
BENCHMARK(BM_QCharReflect)->DenseRange(2, 8, 2);

void BM_BuildOperator(benchmark::State& state)
{
    const ParitySeq s({1, -1, 1});
    const LWeight zeta(s, {RatB({-1, -2}, {0, 1}), RatB({Rational(1, 3)}, {Rational(-2)}), RatB({4}, {Rational(7, 2)})});
    const std::vector<DensePoly> y{DensePoly{Rational(1, 2), 1}, DensePoly{-3, 1}};
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_operator(s, zeta, y, order));
}
BENCHMARK(BM_BuildOperator)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
