#include "selfsim/algebra.hpp"
#include "selfsim/hausdorff.hpp"
#include "selfsim/katsura.hpp"
#include "selfsim/steinberg.hpp"
#include "selfsim/zero.hpp"

#include <benchmark/benchmark.h>

using namespace selfsim;

namespace {

// Loop e and exit f at u, loop g at v.
std::shared_ptr<SelfSimilarAction> loop_and_exit() {
  return build_triple(KatsuraSpec{2, {{1, 1}, {0, 1}}, {{1, 0}, {0, 1}}, {"u", "v"}});
}

// F_u finite with five minimal paths.
std::shared_ptr<SelfSimilarAction> five_paths() {
  return build_triple(KatsuraSpec{5,
                                  {{0, 2, 0, 0, 3}, {0, 0, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
                                  {{0, 1, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}},
                                  {"u", "v", "v'", "v''", "w"}});
}

std::shared_ptr<SelfSimilarAction> b_equals_a() {
  return build_triple(KatsuraSpec{2, {{2, 1}, {1, 1}}, {{2, 1}, {1, 1}}, {"a", "b"}});
}

void BM_MinimalFixedPaths(benchmark::State& state) {
  auto act = loop_and_exit();
  const auto u = act->graph().vertex_by_name("u");
  const auto max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_fixed_paths(*act, u, 1, max_len));
}
BENCHMARK(BM_MinimalFixedPaths)->Arg(6)->Arg(12)->Arg(24);

void BM_DecideHausdorff(benchmark::State& state) {
  auto act = state.range(0) == 0 ? loop_and_exit() : state.range(0) == 1 ? five_paths() : b_equals_a();
  for (auto _ : state) benchmark::DoNotOptimize(decide_hausdorff(*act));
}
BENCHMARK(BM_DecideHausdorff)->Arg(0)->Arg(1)->Arg(2);

void BM_ActOnPath(benchmark::State& state) {
  auto act = b_equals_a();
  const Graph& G = act->graph();
  Path p = G.extend_paths(G.vertex_by_name("a"), 8).front();
  GroupElem g(static_cast<long long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(act->act_on(g, p));
}
BENCHMARK(BM_ActOnPath)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_ElementProduct(benchmark::State& state) {
  auto act = five_paths();
  Algebra alg(act, Ring::integers());
  const auto u = act->graph().vertex_by_name("u");
  Element a = alg.zero();
  for (long m = 0; m < 6; ++m) a += alg.p(u, GroupElem(static_cast<long long>(m)));
  for (EdgeId e : act->graph().edges_into(u)) a += alg.s(e);
  for (auto _ : state) benchmark::DoNotOptimize(a * adj(a));
}
BENCHMARK(BM_ElementProduct);

void BM_SixTermZeroTest(benchmark::State& state) {
  auto act = five_paths();
  Algebra alg(act, Ring::integers());
  const auto u = act->graph().vertex_by_name("u");
  auto P = [&](long m) { return alg.p(u, GroupElem(static_cast<long long>(m))); };
  Element d = P(0) + 2 * P(1) + P(2) - P(3) - 2 * P(4) - P(5);
  ZeroOptions opt;
  opt.cross_check = false;
  for (auto _ : state) benchmark::DoNotOptimize(elem_is_zero(d, opt));
}
BENCHMARK(BM_SixTermZeroTest);

void BM_GermTestSetEval(benchmark::State& state) {
  auto act = loop_and_exit();
  Algebra alg(act, Ring::integers());
  const auto u = act->graph().vertex_by_name("u");
  SteinbergFn f = pi_map(alg.p(u, GroupElem(0ll)) - alg.p(u, GroupElem(1ll)));
  auto germs = germ_test_set(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : germs) benchmark::DoNotOptimize(fn_eval(f, p));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * germs.size()));
}
BENCHMARK(BM_GermTestSetEval)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
