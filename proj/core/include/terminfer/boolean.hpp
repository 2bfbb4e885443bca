#pragma once

#include "terminfer/levelmap.hpp"

#include <map>
#include <vector>

namespace terminfer {

struct BoolAtom {
    PredId pred;
    std::vector<BoolFun> args;
};

/// CLP(B) image of a numeric clause: numbers become 1, variables stay, sums
/// become conjunctions; equalities of the clause constraint become iffs.
struct BoolClause {
    BoolAtom head;
    std::vector<BoolAtom> body;
    BoolFun constraint = BoolFun::constant(true);
    std::vector<std::string> variables;
};

struct BoolProgram {
    std::vector<PredId> predicates;
    std::map<PredId, std::vector<BoolClause>> clauses;
    /// Boolean posts and termination conditions of the builtin table.
    std::map<PredId, BoolFun> builtin_posts;
    std::map<PredId, BoolFun> builtin_pres;

    const std::vector<BoolClause> &clauses_of(const PredId &p) const;
};

/// Conjunction of the variables with a non-zero coefficient.
BoolFun boolean_image(const LinExpr &e);

BoolProgram abstract_boolean(const NumProgram &program, const BuiltinTable &builtins);

/// Formula per predicate over x1..xN.
using BoolMap = std::map<PredId, BoolFun>;

/// `app/3: x1*x2 <-> x3` lines for the predicates of `order` present in `m`.
std::string to_string(const BoolMap &m, const std::vector<PredId> &order);

struct BooleanResult {
    BoolMap map;
    std::vector<Diagnostic> diagnostics;
};

/// Answers of a clause under `posts` (lookup falls back to the builtin
/// posts, undefined predicates are 0), over x1..xN.
BoolFun boolean_consequence(const BoolClause &c, const BoolProgram &program, const BoolMap &posts);

/// post^B by Kleene iteration from 0 per SCC. An SCC that runs out of fuel
/// gets 1 for every member.
BooleanResult compute_boolean_model(const BoolProgram &program, const SccOrder &order,
                                    std::int64_t fuel = FuelScope::kUnlimited);

/// |p|^B: disjunction over the mapping set of the conjunction of the
/// variables with positive coefficient; the empty set is 1, failure is 0.
BoolMap boolean_level_mapping(const LevelMapping &lm);

/// One application of the termination operator to the SCC members, given
/// the current conditions `pre` (which must also hold the final conditions
/// of lower SCCs).
BoolMap termination_step(const std::vector<PredId> &scc, const BoolProgram &program, const BoolMap &model,
                         const BoolMap &blm, const BoolMap &pre);

/// pre_p per SCC as the greatest fixpoint of termination_step, iterated from
/// 1. An SCC that runs out of fuel gets 0 for every member.
BooleanResult compute_termination_conditions(const BoolProgram &program, const BoolMap &model, const BoolMap &blm,
                                             const SccOrder &order, std::int64_t fuel = FuelScope::kUnlimited);

} // namespace terminfer
