#include "terminfer/boolean.hpp"

#include "corpus.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace terminfer;
using namespace terminfer::testing;

namespace {

BoolFun fn(const std::string &text) { return parse_formula(text); }

LinExpr v(const std::string &name, long c = 1) { return LinExpr::variable(name, c); }

} // namespace

TEST(BooleanImage, ConjunctionOfSupport) {
    EXPECT_EQ(boolean_image(LinExpr(3)), BoolFun::constant(true));
    EXPECT_EQ(boolean_image(v("E") + v("X") + LinExpr(1)), fn("E*X"));
    EXPECT_EQ(boolean_image(v("X", 2)), fn("X"));
}

TEST(BooleanAbstraction, AppClause) {
    auto program = parse_program(kRunningExample);
    auto bp = abstract_boolean(abstract_program(program), program.builtins());
    const auto &c = bp.clauses_of({"app", 3})[1];
    ASSERT_EQ(c.head.args.size(), 3u);
    EXPECT_EQ(c.head.args[0], fn("E*X"));
    EXPECT_EQ(c.head.args[1], fn("Y"));
    EXPECT_EQ(c.head.args[2], fn("E*Z"));
    EXPECT_TRUE(c.constraint.is_true());
}

TEST(BooleanModel, RunningExample) {
    auto a = analyze(parse_program(kRunningExample));
    const auto &m = a.bool_model.map;
    EXPECT_EQ(m.at({"app", 3}), fn("x1*x2 <-> x3"));
    EXPECT_EQ(m.at({"nrev", 2}), fn("x1 <-> x2"));
    EXPECT_EQ(m.at({"app3", 4}), fn("x1*x2*x3 <-> x4"));
    EXPECT_EQ(to_string(m, {{"app", 3}}), "app/3: x1*x2 <-> x3\n");
}

TEST(BooleanModel, PostsArePositive) {
    auto a = analyze(parse_program(kRunningExample));
    for (const auto &[p, f] : a.bool_model.map)
        EXPECT_TRUE(f.is_positive() || f.is_false()) << p.to_string();
}

TEST(BooleanModel, PostFixpointOnRunningExample) {
    auto a = analyze(parse_program(kRunningExample));
    auto failures = boolean_postfixpoint_failures(a);
    EXPECT_TRUE(failures.empty()) << failures.front();
}

TEST(BooleanModel, StarvedSccIsTrue) {
    auto program = parse_program(kRunningExample);
    auto bp = abstract_boolean(abstract_program(program), program.builtins());
    auto r = compute_boolean_model(bp, scc_order(build_call_graph(program)), 1);
    for (const auto &[p, f] : r.map)
        EXPECT_TRUE(f.is_true()) << p.to_string();
    EXPECT_FALSE(r.diagnostics.empty());
}

TEST(BooleanLevelMapping, FromLevelMappings) {
    auto a = analyze(parse_program(kRunningExample));
    EXPECT_EQ(a.bool_levels.at({"app", 3}), fn("x1 + x3"));
    EXPECT_EQ(a.bool_levels.at({"nrev", 2}), fn("x1"));
    EXPECT_TRUE(a.bool_levels.at({"app3", 4}).is_true());

    auto failed = analyze(parse_program("p(X) :- p(X)."));
    EXPECT_TRUE(failed.bool_levels.at({"p", 1}).is_false());
}

TEST(TerminationConditions, RunningExample) {
    auto a = analyze(parse_program(kRunningExample));
    EXPECT_EQ(a.pre.map.at({"app", 3}), fn("x1 + x3"));
    EXPECT_EQ(a.pre.map.at({"nrev", 2}), fn("x1"));
    EXPECT_EQ(a.pre.map.at({"app3", 4}), fn("x1*x2 + x1*x4"));
}

TEST(TerminationConditions, CertificateAndMaximality) {
    auto a = analyze(parse_program(kRunningExample));
    auto cert = gfp_certificate_failures(a);
    EXPECT_TRUE(cert.empty()) << cert.front();
    int checked = 0;
    auto max = gfp_maximality_failures(a, &checked);
    EXPECT_TRUE(max.empty()) << max.front();
    EXPECT_EQ(checked, 2); // app/3 and nrev/2
}

TEST(TerminationConditions, UndefinedCallTerminates) {
    // A call to an undefined predicate fails at once; the later call is
    // never reached.
    auto a = analyze(parse_program("p(X) :- q(X), p(X)."));
    EXPECT_TRUE(a.pre.map.at({"p", 1}).is_true());
}

TEST(TerminationConditions, StarvedSccIsFalse) {
    auto a = analyze(parse_program(kRunningExample));
    auto r = compute_termination_conditions(a.bool_program, a.bool_model.map, a.bool_levels, a.order, 1);
    for (const auto &[p, f] : r.map)
        EXPECT_TRUE(f.is_false()) << p.to_string();
}

TEST(TerminationConditions, StepIsMonotone) {
    auto a = analyze(parse_program(kRunningExample));
    std::vector<PredId> scc{{"app", 3}};
    auto lo = a.pre.map, hi = a.pre.map;
    lo[{"app", 3}] = fn("x1");
    hi[{"app", 3}] = fn("x1 + x2");
    auto slo = termination_step(scc, a.bool_program, a.bool_model.map, a.bool_levels, lo);
    auto shi = termination_step(scc, a.bool_program, a.bool_model.map, a.bool_levels, hi);
    EXPECT_TRUE(slo.at({"app", 3}).entails(shi.at({"app", 3})));
}
