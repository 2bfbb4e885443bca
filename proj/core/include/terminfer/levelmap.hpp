#pragma once

#include "terminfer/numeric.hpp"

#include <map>
#include <set>
#include <vector>

namespace terminfer {

/// The call at `body_index` of `clause` must decrease the level mapping.
struct Obligation {
    Polyhedron context;
    NumAtom head;
    NumAtom call;
    std::size_t body_index = 0;
};

/// One obligation per same-SCC body atom of each clause of `scc`. The
/// context is the clause constraint with the posts of the atoms before the
/// call.
std::vector<Obligation> decrease_obligations(const std::vector<PredId> &scc, const NumProgram &program,
                                             const NumericModel &model);

/// Name of the coefficient of argument `position` of `p`; position 0 is the
/// constant term.
std::string coefficient_name(const PredId &p, std::size_t position);

/// Coefficient vectors c such that the affine mappings
/// f_p(x) = c_p0 + sum c_pi * x_i satisfy f(head) >= f(call) + 1 on every
/// obligation context. Dimensions are the coefficients of the SCC members in
/// order, constant term first.
Polyhedron coefficient_constraints(const std::vector<PredId> &scc, const std::vector<Obligation> &obligations);

/// Per-SCC outcome of level-mapping synthesis.
struct SccMapping {
    enum class Status { NonRecursive, Found, Failed };

    std::vector<PredId> scc;
    Status status = Status::NonRecursive;
    /// Each candidate maps every member of the SCC to an affine expression
    /// over x1..xN; the members' level is the minimum over candidates.
    std::vector<std::map<PredId, LinExpr>> candidates;
};

/// Picks one integral candidate per minimal support of the argument
/// coefficients, smallest supports first.
SccMapping concretize(const std::vector<PredId> &scc, const Polyhedron &space, bool has_obligations);

/// Every candidate decreases on every obligation.
bool audit(const SccMapping &mapping, const std::vector<Obligation> &obligations);

struct LevelMapping {
    std::vector<SccMapping> sccs;

    const SccMapping *scc_of(const PredId &p) const;
    /// Distinct expressions for `p`; empty for the constant mapping.
    std::vector<LinExpr> expressions(const PredId &p) const;
    bool failed(const PredId &p) const;
    /// `app/3: min(x1, x3)`, `nrev/2: x1`, `app3/4: 0`, `p/1: failed`.
    std::string to_string(const std::vector<PredId> &order) const;
};

struct LevelMappingResult {
    LevelMapping mapping;
    std::vector<Diagnostic> diagnostics;
};

/// Synthesis for every SCC of `order`, each under its own fuel budget. An
/// SCC that runs out of fuel fails.
LevelMappingResult compute_level_mappings(const NumProgram &program, const SccOrder &order,
                                          const NumericModel &model, std::int64_t fuel = FuelScope::kUnlimited);

} // namespace terminfer
