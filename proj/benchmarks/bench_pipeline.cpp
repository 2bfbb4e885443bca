#include "terminfer/interpreter.hpp"
#include "terminfer/reader.hpp"
#include "terminfer/report.hpp"

#include <benchmark/benchmark.h>

using namespace terminfer;

namespace {

const char *kAppNrev = R"(
app([], X, X).
app([E|X], Y, [E|Z]) :- app(X, Y, Z).
nrev([], []).
nrev([E|X], Y) :- nrev(X, Z), app(Z, [E], Y).
app3(X, Y, Z, U) :- app(X, Y, V), app(V, Z, U).
)";

void BM_RunningExample(benchmark::State &state) {
    auto program = parse_program(kAppNrev);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(program));
}
BENCHMARK(BM_RunningExample)->Unit(benchmark::kMillisecond);

void BM_CorpusProgram(benchmark::State &state, const std::string &file) {
    auto program = load_program(std::string(TERMINFER_CORPUS_DIR) + "/" + file);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(program));
}
BENCHMARK_CAPTURE(BM_CorpusProgram, permute, "permute.pl")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusProgram, quicksort, "quicksort.pl")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusProgram, mergesort, "mergesort.pl")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusProgram, turing, "pl5_2_2.pl")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusProgram, expressions, "pl8_4_2.pl")->Unit(benchmark::kMillisecond);

void BM_InterpreterNrev(benchmark::State &state) {
    auto program = parse_program(kAppNrev);
    std::vector<Term> items;
    for (int i = 0; i < state.range(0); ++i)
        items.push_back(Term::integer(i));
    Atom q{{"nrev", 2}, {Term::list(items), Term::variable("R")}};
    for (auto _ : state)
        benchmark::DoNotOptimize(run_query(program, q));
}
BENCHMARK(BM_InterpreterNrev)->Arg(30)->Arg(100);

} // namespace

BENCHMARK_MAIN();
