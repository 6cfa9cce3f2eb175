#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "bproof/binder.hpp"
#include "bproof/derived.hpp"
#include "bproof/gen.hpp"
#include "bproof/kernel.hpp"
#include "bproof/psubst.hpp"
#include "bproof/script.hpp"
#include "bproof/syntax.hpp"

namespace {

using namespace bproof;

Term term_of_depth(unsigned depth) {
  GenConfig cfg;
  cfg.max_depth = depth;
  TermGen g(0xb0bcafe5u + depth, cfg);
  return g.term();
}

void BM_Abstract(benchmark::State& state) {
  const Term t = term_of_depth(static_cast<unsigned>(state.range(0)));
  const Var v = uvar(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(abstract(v, 0, t));
  }
}
BENCHMARK(BM_Abstract)->Arg(4)->Arg(8)->Arg(12);

void BM_Subst(benchmark::State& state) {
  const Term t = term_of_depth(static_cast<unsigned>(state.range(0)));
  const Expr e = Expr::pair(Expr::var(uvar(1)), Expr::big());
  for (auto _ : state) {
    benchmark::DoNotOptimize(subst(uvar(0), e, 0, t));
  }
}
BENCHMARK(BM_Subst)->Arg(4)->Arg(8)->Arg(12);

void BM_Graft(benchmark::State& state) {
  const Term t = term_of_depth(static_cast<unsigned>(state.range(0)));
  const Expr e = Expr::pair(Expr::var(mvar(0)), Expr::var(uvar(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(graft(uvar(0), e, 0, t));
  }
}
BENCHMARK(BM_Graft)->Arg(4)->Arg(8)->Arg(12);

void BM_PApplyShift(benchmark::State& state) {
  const Term t = term_of_depth(static_cast<unsigned>(state.range(0)));
  const ParallelSubst s = ParallelSubst::shift(Namespace::machinery(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(papply(s, t));
  }
}
BENCHMARK(BM_PApplyShift)->Arg(4)->Arg(8)->Arg(12);

void BM_Parse(benchmark::State& state) {
  const std::string text =
      "!x.(x : S => #y.(x |-> y : {z : POW(S) | z = x} & not (y = x or y : T)))";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_pred(text));
  }
}
BENCHMARK(BM_Parse);

void BM_Print(benchmark::State& state) {
  const Pred p = parse_pred(
      "!x.(x : S => #y.(x |-> y : {z : POW(S) | z = x} & not (y = x or y : T)))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_pred(p));
  }
}
BENCHMARK(BM_Print);

void BM_ExcludedMiddle(benchmark::State& state) {
  GenConfig cfg;
  cfg.max_depth = 8;
  TermGen g(0xb0bcafe5u, cfg);
  const Pred p = g.pred();
  for (auto _ : state) {
    benchmark::DoNotOptimize(excluded_middle(ProofEnv{}, p));
  }
}
BENCHMARK(BM_ExcludedMiddle);

void BM_GraftCong(benchmark::State& state) {
  SymbolTable table;
  const Var a = table.intern("u", "a");
  const Pred hyp = parse_pred_with(table, "a = b");
  const ProofEnv env = {hyp};
  const Theorem teq = ax(env, hyp);
  const Pred target = parse_pred_with(table, "!x.(a : S => x |-> a : T)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(graft_cong_ns(teq, a, Term{target}));
  }
}
BENCHMARK(BM_GraftCong);

void BM_CheckScript(benchmark::State& state) {
  const std::string script = R"(
    theorem and_round
    env: a : S ; b : T
    h1: ax "a : S"
    h2: ax "b : T"
    c: and_i h1 h2
    l: and_e1 c
    r: and_e2 c
    c2: and_i r l
    qed c2 : "b : T & a : S"
  )";
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_script(script));
  }
}
BENCHMARK(BM_CheckScript);

}  // namespace

BENCHMARK_MAIN();
