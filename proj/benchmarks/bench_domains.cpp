#include "terminfer/boolfun.hpp"
#include "terminfer/polyhedron.hpp"

#include <benchmark/benchmark.h>

using namespace terminfer;

namespace {

LinExpr v(const std::string &name, long c = 1) { return LinExpr::variable(name, c); }

Polyhedron poly(std::vector<std::string> dims, std::vector<LinConstraint> cs) {
    return Polyhedron::from_constraints(std::move(dims), cs);
}

// The body of the recursive append clause, over clause and head variables.
Polyhedron append_body() {
    return poly({"x1", "x2", "x3", "E", "X", "Y", "Z"},
                                        {LinConstraint::eq(v("x1"), v("E") + v("X") + LinExpr(1)),
                                         LinConstraint::eq(v("x2"), v("Y")),
                                         LinConstraint::eq(v("x3"), v("E") + v("Z") + LinExpr(1)),
                                         LinConstraint::eq(v("X") + v("Y"), v("Z"))});
}

void BM_Project(benchmark::State &state) {
    auto p = append_body();
    for (auto _ : state)
        benchmark::DoNotOptimize(p.project({"x1", "x2", "x3"}));
}
BENCHMARK(BM_Project);

void BM_HullAndWiden(benchmark::State &state) {
    const std::vector<std::string> d{"x1", "x2", "x3"};
    auto base = poly(
        d, {LinConstraint::eq(v("x1"), LinExpr(0)), LinConstraint::eq(v("x2"), v("x3"))});
    auto step = poly(
        d, {LinConstraint::eq(v("x1"), LinExpr(1)), LinConstraint::eq(v("x2") + LinExpr(1), v("x3"))});
    for (auto _ : state) {
        auto h = base.hull(step);
        benchmark::DoNotOptimize(base.widen(h));
    }
}
BENCHMARK(BM_HullAndWiden);

void BM_Entailment(benchmark::State &state) {
    auto p = append_body();
    auto c = LinConstraint::ge(v("x1"), v("X") + LinExpr(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(p.entails(c));
}
BENCHMARK(BM_Entailment);

// forall over a clause-sized implication, as in one termination step.
void BM_BoolForall(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    BoolFun f = BoolFun::constant(true);
    std::set<std::string> locals;
    for (int i = 1; i <= n; ++i) {
        auto a = BoolFun::variable("v" + std::to_string(i));
        auto b = BoolFun::variable("v" + std::to_string(i % n + 1));
        f = conj(f, implies(a, b));
        if (i % 2)
            locals.insert("v" + std::to_string(i));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(f.forall(locals));
}
BENCHMARK(BM_BoolForall)->Arg(6)->Arg(12)->Arg(18);

void BM_BoolRender(benchmark::State &state) {
    auto f = parse_formula("x1*x2 + x1*x4 + x3*x5*x6");
    for (auto _ : state)
        benchmark::DoNotOptimize(f.to_string());
}
BENCHMARK(BM_BoolRender);

} // namespace
