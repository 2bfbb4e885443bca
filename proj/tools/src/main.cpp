#include "terminfer/error.hpp"
#include "terminfer/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace terminfer;

namespace {

constexpr int kExitFrontend = 1;
constexpr int kExitUsage = 2;

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Termination inference for pure logic programs"};
    app.set_version_flag("--version", "terminfer 0.1.0");

    std::string source;
    std::vector<std::string> imports;
    std::int64_t timeout_ms = 2000;
    int widen_delay = 1;
    bool dump_sccs = false, dump_clp = false, dump_num = false, dump_levels = false, dump_bool = false,
         dump_pre = false, explain = false;

    app.add_option("-p", imports, "Builtin table file with extra or redefined predicates");
    app.add_option("-t", timeout_ms, "Time limit per step and SCC in milliseconds, mapped to fuel")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-n", widen_delay, "Iterations before widening")->check(CLI::NonNegativeNumber);
    app.add_flag("--dump-sccs", dump_sccs, "Print the SCCs, callees first");
    app.add_flag("--dump-clp-n", dump_clp, "Print the numeric abstraction of the program");
    app.add_flag("--dump-num-model", dump_num, "Print the numeric model");
    app.add_flag("--dump-level-mappings", dump_levels, "Print the level mappings");
    app.add_flag("--dump-bool-model", dump_bool, "Print the boolean model");
    app.add_flag("--dump-pre", dump_pre, "Print the termination conditions of all predicates");
    app.add_flag("--explain", explain, "Print each condition as a groundness sentence");
    app.add_option("SOURCE", source, "Program to analyze")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    PipelineOptions options;
    options.fuel = timeout_ms * kFuelPerMillisecond;
    options.widen_delay = widen_delay;

    Analysis a;
    try {
        BuiltinTable builtins = BuiltinTable::standard();
        for (const auto &file : imports)
            builtins.load_file(file);
        a = run_pipeline(source, options, std::move(builtins));
    } catch (const SyntaxError &e) {
        std::cerr << source << ":" << e.what() << "\n";
        return kExitFrontend;
    } catch (const Error &e) {
        std::cerr << "terminfer: " << e.what() << "\n";
        return kExitFrontend;
    }

    const auto &order = a.program.predicates();
    auto section = [](const char *title, const std::string &body) { std::cout << "% " << title << "\n" << body; };
    if (dump_sccs)
        section("sccs", a.order.to_string());
    if (dump_clp)
        section("clp(n)", a.num_program.to_string());
    if (dump_num)
        section("numeric model", a.numeric.model.to_string(order));
    if (dump_levels)
        section("level mappings", a.levels.mapping.to_string(order));
    if (dump_bool)
        section("boolean model", to_string(a.bool_model.map, order));
    if (dump_pre)
        section("termination conditions", to_string(a.pre.map, order));
    std::cout << a.report.to_string();
    if (explain)
        std::cout << a.report.sentences();
    for (const auto &d : a.report.diagnostics)
        std::cerr << "terminfer: " << d.to_string() << "\n";
    return 0;
}
