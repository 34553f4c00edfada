#include <benchmark/benchmark.h>

#include "sadic/core_ops.hpp"
#include "sadic/decoration.hpp"
#include "sadic/derivation.hpp"
#include "sadic/language.hpp"

using namespace sadic;

namespace {

SubstitutionSet example1() {
    Alphabet a("ob");
    return SubstitutionSet(
        a, {Substitution("s", {RectPattern::parse("oo/oo", a), RectPattern::parse("oo/bo", a)})});
}

SubstitutionSet example3() {
    Alphabet a("ob");
    return SubstitutionSet(
        a, {Substitution("a", {RectPattern::parse("oo/oo", a), RectPattern::parse("oo/bo", a)}),
            Substitution("b", {RectPattern::parse("obo/obo", a), RectPattern::parse("ooo/boo", a)}),
            Substitution("c", {RectPattern::parse("oo/bo/ob", a), RectPattern::parse("oo/ob/bb", a)}),
            Substitution("d", {RectPattern::parse("bbb/bbb/ooo", a),
                               RectPattern::parse("ooo/ooo/bbb", a)})});
}

void BM_apply_uniform(benchmark::State& state) {
    SubstitutionSet set = example1();
    SequenceSpec seq({}, {0});
    RectPattern p = iterate(set, seq, static_cast<int>(state.range(0)), Letter{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_uniform(set.member(0), p));
    }
    state.SetItemsProcessed(state.iterations() * p.width() * p.height());
}
BENCHMARK(BM_apply_uniform)->Arg(4)->Arg(6)->Arg(8);

void BM_iterate(benchmark::State& state) {
    SubstitutionSet set = example3();
    SequenceSpec seq({}, {0, 2, 1, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate(set, seq, static_cast<int>(state.range(0)), Letter{1}));
    }
}
BENCHMARK(BM_iterate)->Arg(3)->Arg(5);

void BM_s_patterns_level2(benchmark::State& state) {
    SubstitutionSet set = example3();
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_patterns(set, 2, 1u << 20));
    }
}
BENCHMARK(BM_s_patterns_level2);

void BM_local_language(benchmark::State& state) {
    SubstitutionSet set = example1();
    SequenceSpec seq({}, {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_language(set, seq, 6, 2, 2));
    }
}
BENCHMARK(BM_local_language);

void BM_global_language_set(benchmark::State& state) {
    SubstitutionSet set = example3();
    for (auto _ : state) {
        benchmark::DoNotOptimize(global_language(set, nullptr, 2, 2, 2, 1u << 20));
    }
}
BENCHMARK(BM_global_language_set);

void BM_desubstitute_windowed(benchmark::State& state) {
    SubstitutionSet set = example1();
    SequenceSpec seq({}, {0});
    RectPattern p = iterate(set, seq, static_cast<int>(state.range(0)), Letter{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(desubstitute(p, set, ParseMode::windowed));
    }
}
BENCHMARK(BM_desubstitute_windowed)->Arg(4)->Arg(6);

void BM_lift(benchmark::State& state) {
    SubstitutionSet set = example3();
    for (auto _ : state) {
        benchmark::DoNotOptimize(DecoratedSystem::lift(set));
    }
}
BENCHMARK(BM_lift);

void BM_history_word(benchmark::State& state) {
    SubstitutionSet set = example1();
    SequenceSpec seq({}, {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(history_word(set, seq, static_cast<int>(state.range(0)),
                                              DecoratedLetter{Letter{1}, 0, 0}));
    }
}
BENCHMARK(BM_history_word)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
