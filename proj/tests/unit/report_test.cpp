#include "terminfer/report.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace terminfer;
using namespace terminfer::testing;

namespace {

BoolFun fn(const std::string &text) { return parse_formula(text); }

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string &args) {
    Run r;
    std::string cmd = std::string(TERMINFER_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = std::string(::testing::TempDir()) + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST(Sentences, Lift) {
    EXPECT_EQ(lift_condition({"app", 3}, fn("x1 + x3")), "terminates if arg1 or arg3 is ground");
    EXPECT_EQ(lift_condition({"nrev", 2}, fn("x1")), "terminates if arg1 is ground");
    EXPECT_EQ(lift_condition({"app3", 4}, fn("x1*x2 + x1*x4")),
              "terminates if arg1 and arg2 are ground or arg1 and arg4 are ground");
    EXPECT_EQ(lift_condition({"goal", 0}, BoolFun::constant(true)), "all calls terminate");
    EXPECT_EQ(lift_condition({"p", 1}, BoolFun::constant(false)), "no terminating mode inferred");
}

TEST(Report, RunningExample) {
    auto a = analyze(parse_program(kRunningExample));
    EXPECT_EQ(a.report.to_string(), "app/3: x1 + x3\nnrev/2: x1\napp3/4: x1*x2 + x1*x4\nquality: 100%\n");
}

TEST(Report, QualityCountsNonZeroConditions) {
    auto a = analyze(parse_program("p(X) :- p(X). q(a). r(X) :- r(X). s."));
    EXPECT_EQ(a.report.quality, Rational(1, 2));
    EXPECT_EQ(a.report.quality_line(), "quality: 50%");
    auto b = analyze(parse_program("p(X) :- p(X). q. r."));
    EXPECT_EQ(b.report.quality_line(), "quality: 66.7%");
}

TEST(Report, AuxiliaryPredicatesAreNotReported) {
    auto a = analyze(parse_program("p(X) :- ( X = a ; X = b )."));
    ASSERT_EQ(a.report.entries.size(), 1u);
    EXPECT_EQ(a.report.entries[0].pred, (PredId{"p", 1}));
}

TEST(Report, StableAcrossRuns) {
    auto first = analyze(parse_program(kRunningExample)).report.to_string();
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(analyze(parse_program(kRunningExample)).report.to_string(), first);
}

TEST(Cli, AnalyzesAFile) {
    auto path = write_temp("cli_app.pl", kRunningExample);
    auto r = cli(path);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "app/3: x1 + x3\nnrev/2: x1\napp3/4: x1*x2 + x1*x4\nquality: 100%\n");
}

TEST(Cli, ExplainAndDumps) {
    auto path = write_temp("cli_app2.pl", kRunningExample);
    auto r = cli("--explain --dump-level-mappings " + path);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("% level mappings\napp/3: min(x1, x3)\n"), std::string::npos);
    EXPECT_NE(r.out.find("nrev/2: terminates if arg1 is ground"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("").status, 2);
    EXPECT_EQ(cli("-t nope x.pl").status, 2);
    EXPECT_EQ(cli("--no-such-flag x.pl").status, 2);
    EXPECT_EQ(cli("/nonexistent/file.pl").status, 1);
    EXPECT_EQ(cli(write_temp("cli_bad.pl", "p(X :- q.")).status, 1);
    EXPECT_EQ(cli(write_temp("cli_assert.pl", "p :- assert(q).")).status, 1);
    EXPECT_EQ(cli("-p /nonexistent/table.pl " + write_temp("cli_ok.pl", "p.")).status, 1);
}

TEST(Cli, ImportedBuiltinTable) {
    auto table = write_temp("cli_table.pl", "builtin(succ/2, num([x2 = x1 + 1]), bool(x1 <-> x2), pre(x1 + x2)).\n");
    auto prog = write_temp("cli_succ.pl", "count(X) :- succ(X, Y), count(Y).\ncount(_).\nnext(X, Y) :- succ(X, Y).\n");
    auto r = cli("-p " + table + " " + prog);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("next/2: x1 + x2\n"), std::string::npos) << r.out;
}

TEST(Cli, NearZeroTimeoutStillReports) {
    auto path = write_temp("cli_app3.pl", kRunningExample);
    auto r = cli("-t 0 " + path);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "app/3: 0\nnrev/2: 0\napp3/4: 0\nquality: 0%\n");
}
