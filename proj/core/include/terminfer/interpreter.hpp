#pragma once

#include "terminfer/program.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace terminfer {

enum class Outcome {
    /// The whole LD-tree was explored and had at least one success.
    Exhausted,
    /// Some goal sat deeper than the depth bound.
    DepthLimitHit,
    /// The whole LD-tree was explored without success.
    Failure,
    /// More resolution steps than allowed; the tree may be finite but wide.
    StepLimitHit,
};

const char *to_string(Outcome o);

struct QueryLimits {
    std::size_t depth = 10000;
    std::uint64_t steps = 10'000'000;
};

struct QueryResult {
    Outcome outcome = Outcome::Failure;
    std::uint64_t solutions = 0;
    std::uint64_t steps = 0;
};

/// Called with the query arguments at each success; unbound variables appear
/// as variables named `_<n>`.
using SolutionCallback = std::function<void(const std::vector<Term> &)>;

/// Depth-first, leftmost selection, textual clause order, unification with
/// occurs check. Builtins of the default table are executed; arithmetic
/// errors and undefined predicates fail.
QueryResult run_query(const Program &program, const Atom &query, const QueryLimits &limits = {},
                      const SolutionCallback &on_solution = {});

} // namespace terminfer
