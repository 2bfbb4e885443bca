#pragma once

#include "terminfer/boolean.hpp"

#include <string>
#include <vector>

namespace terminfer {

/// Groundness reading of a termination condition over x1..xN:
/// `terminates if arg1 or arg3 is ground`, `all calls terminate`.
std::string lift_condition(const PredId &p, const BoolFun &pre);

struct Report {
    struct Entry {
        PredId pred;
        BoolFun pre;
        std::string sentence;
    };

    std::vector<Entry> entries;
    /// Share of user predicates with a non-zero condition.
    Rational quality;
    std::vector<Diagnostic> diagnostics;

    /// `quality: 66.7%`, one decimal, trailing `.0` dropped.
    std::string quality_line() const;
    /// `name/arity: FORMULA` lines followed by the quality line.
    std::string to_string() const;
    /// `name/arity: sentence` lines.
    std::string sentences() const;
};

struct PipelineOptions {
    /// Fuel per step and SCC; the default matches a 2 second time limit.
    std::int64_t fuel = 2000 * kFuelPerMillisecond;
    int widen_delay = 1;
};

/// Every intermediate result of the six steps.
struct Analysis {
    Program program;
    SccOrder order;
    NumProgram num_program;
    NumericResult numeric;
    LevelMappingResult levels;
    BoolProgram bool_program;
    BooleanResult bool_model;
    BoolMap bool_levels;
    BooleanResult pre;
    Report report;
};

Analysis analyze(Program program, const PipelineOptions &options = {});

/// Loads and analyzes a source file. Throws SyntaxError, ProgramError or
/// Error on unreadable input.
Analysis run_pipeline(const std::string &path, const PipelineOptions &options = {},
                      BuiltinTable builtins = BuiltinTable::standard());

} // namespace terminfer
