#include "terminfer/report.hpp"

#include <algorithm>
#include <cstdio>

namespace terminfer {

std::string lift_condition(const PredId &, const BoolFun &pre) {
    if (pre.is_true())
        return "all calls terminate";
    if (pre.is_false())
        return "no terminating mode inferred";
    auto arg = [](const std::string &v) { return "arg" + v.substr(1); };
    if (!pre.is_monotone())
        return "terminates if the groundness of the arguments satisfies " + pre.to_string();
    auto models = pre.minimal_models();
    bool singletons = std::all_of(models.begin(), models.end(), [](const auto &m) { return m.size() == 1; });
    std::string s = "terminates if ";
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (i)
            s += " or ";
        for (std::size_t j = 0; j < models[i].size(); ++j)
            s += (j ? " and " : "") + arg(models[i][j]);
        if (!singletons)
            s += models[i].size() == 1 ? " is ground" : " are ground";
    }
    if (singletons)
        s += " is ground";
    return s;
}

std::string Report::quality_line() const {
    double pct = quality.get_d() * 100.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", pct);
    std::string s = buf;
    if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0)
        s.resize(s.size() - 2);
    return "quality: " + s + "%";
}

std::string Report::to_string() const {
    std::string s;
    for (const auto &e : entries)
        s += e.pred.to_string() + ": " + e.pre.to_string() + "\n";
    return s + quality_line() + "\n";
}

std::string Report::sentences() const {
    std::string s;
    for (const auto &e : entries)
        s += e.pred.to_string() + ": " + e.sentence + "\n";
    return s;
}

Analysis analyze(Program program, const PipelineOptions &options) {
    Analysis a;
    a.program = std::move(program);
    a.order = scc_order(build_call_graph(a.program));
    a.num_program = abstract_program(a.program);
    a.numeric = compute_numeric_model(a.num_program, a.order, {options.widen_delay, options.fuel});
    a.levels = compute_level_mappings(a.num_program, a.order, a.numeric.model, options.fuel);
    a.bool_program = abstract_boolean(a.num_program, a.program.builtins());
    a.bool_model = compute_boolean_model(a.bool_program, a.order, options.fuel);
    a.bool_levels = boolean_level_mapping(a.levels.mapping);
    a.pre = compute_termination_conditions(a.bool_program, a.bool_model.map, a.bool_levels, a.order, options.fuel);

    Report &r = a.report;
    std::size_t nonzero = 0;
    for (const auto &p : a.program.user_predicates()) {
        const BoolFun &pre = a.pre.map.at(p);
        r.entries.push_back({p, pre, lift_condition(p, pre)});
        if (!pre.is_false())
            ++nonzero;
    }
    r.quality = r.entries.empty() ? Rational(1) : Rational(nonzero, r.entries.size());
    r.quality.canonicalize();
    for (const auto *ds : {&a.numeric.diagnostics, &a.levels.diagnostics, &a.bool_model.diagnostics,
                           &a.pre.diagnostics})
        r.diagnostics.insert(r.diagnostics.end(), ds->begin(), ds->end());
    return a;
}

Analysis run_pipeline(const std::string &path, const PipelineOptions &options, BuiltinTable builtins) {
    return analyze(load_program(path, std::move(builtins)), options);
}

} // namespace terminfer
