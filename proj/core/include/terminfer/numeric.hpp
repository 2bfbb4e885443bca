#pragma once

#include "terminfer/abstraction.hpp"
#include "terminfer/callgraph.hpp"
#include "terminfer/diagnostic.hpp"
#include "terminfer/fuel.hpp"

#include <functional>
#include <map>

namespace terminfer {

/// post^N per defined predicate, each over x1..xN.
struct NumericModel {
    std::map<PredId, Polyhedron> posts;

    const Polyhedron *find(const PredId &p) const;
    /// One line per predicate of `order`: `app/3: {x1 + x2 = x3}`.
    std::string to_string(const std::vector<PredId> &order) const;
};

/// Model of a called predicate: the current iterate for the SCC under
/// analysis, then `model`, then the builtin table; undefined predicates are
/// empty.
using ModelLookup = std::function<Polyhedron(const PredId &)>;

ModelLookup model_lookup(const NumProgram &program, const NumericModel &model);

/// Constraints over the clause variables stating that `args` lie in `post`,
/// a polyhedron over x1..xN.
std::vector<LinConstraint> instantiate(const Polyhedron &post, const std::vector<LinExpr> &args);

/// Clause constraint conjoined with the posts of `body[0..count)`, over the
/// clause variables.
Polyhedron body_context(const NumClause &c, std::size_t count, const ModelLookup &lookup);

/// Answers of the clause given the body models, over the head arguments
/// x1..xN.
Polyhedron clause_consequence(const NumClause &c, const ModelLookup &lookup);

struct NumericParams {
    /// Plain iterations before widening starts.
    int widen_delay = 1;
    /// Fuel per SCC.
    std::int64_t fuel = FuelScope::kUnlimited;
};

struct NumericResult {
    NumericModel model;
    std::vector<Diagnostic> diagnostics;
};

/// SCC by SCC in `order`: simultaneous iteration from the empty set, hull as
/// join, widening after `widen_delay` rounds. An SCC that runs out of fuel
/// gets the universe for every member.
NumericResult compute_numeric_model(const NumProgram &program, const SccOrder &order,
                                    const NumericParams &params = {});

} // namespace terminfer
