#include <benchmark/benchmark.h>

#include "lieomega/gsb.hpp"
#include "lieomega/syntax.hpp"

namespace lieomega {
namespace {

Alphabet letters(int k) {
  std::vector<std::string> gens;
  for (int i = k; i >= 1; --i) gens.push_back("x" + std::to_string(i));
  if (k == 1) gens = {"x"};
  return Alphabet(gens, {{"P", 1}});
}

void BM_AlswEnumeration(benchmark::State& state) {
  const Alphabet a = letters(2);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alsw_by_degree(a, d));
}
BENCHMARK(BM_AlswEnumeration)->DenseRange(5, 8);

void BM_StdBracketAndEvaluate(benchmark::State& state) {
  const Alphabet a = letters(2);
  const auto words = alsw_by_degree(a, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& u : words.back()) benchmark::DoNotOptimize(evaluate_assoc(std_bracket(u)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.back().size()));
}
BENCHMARK(BM_StdBracketAndEvaluate)->DenseRange(5, 7);

void BM_ToNlsw(benchmark::State& state) {
  const Alphabet a = letters(2);
  const auto words = alsw_by_degree(a, 7);
  std::vector<AssocPoly> expansions;
  for (const auto& u : words.back()) expansions.push_back(expand(basis_element(u)));
  for (auto _ : state) {
    for (const auto& e : expansions) benchmark::DoNotOptimize(to_nlsw(e));
  }
}
BENCHMARK(BM_ToNlsw);

void BM_Reduce(benchmark::State& state) {
  const Alphabet a = letters(2);
  const RuleSet rb = preset_rules(PresetKind::RotaBaxter, a, 8);
  const LiePoly h = parse_poly("((P(x2) P(x1)) P((P(x2) x1))) + l*(P(x2) (P(P(x1)) x1))", a);
  for (auto _ : state) {
    Reducer reducer(rb);
    benchmark::DoNotOptimize(reducer.reduce(h));
  }
}
BENCHMARK(BM_Reduce);

void BM_CheckGsb(benchmark::State& state) {
  const auto gens = static_cast<int>(state.range(0));
  const auto d = static_cast<std::uint32_t>(state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  const RuleSet rb = preset_rules(PresetKind::RotaBaxter, letters(gens), d);
  for (auto _ : state) benchmark::DoNotOptimize(check_gsb(rb, d, threads));
}
BENCHMARK(BM_CheckGsb)->Args({1, 9, 1})->Args({2, 7, 1})->Args({2, 8, 1})->Args({2, 8, 4})->Unit(benchmark::kMillisecond);

void BM_AssocCheck(benchmark::State& state) {
  const RuleSet rb = preset_rules(PresetKind::RotaBaxter, letters(2), 7);
  for (auto _ : state) benchmark::DoNotOptimize(assoc_check(rb, 7));
}
BENCHMARK(BM_AssocCheck)->Unit(benchmark::kMillisecond);

void BM_DimOracle(benchmark::State& state) {
  const auto d = static_cast<std::uint32_t>(state.range(0));
  const RuleSet rb = preset_rules(PresetKind::RotaBaxter, letters(2), d);
  for (auto _ : state) benchmark::DoNotOptimize(dim_oracle(rb, d, 1));
}
BENCHMARK(BM_DimOracle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lieomega

BENCHMARK_MAIN();
