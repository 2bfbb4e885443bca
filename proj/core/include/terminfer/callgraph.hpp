#pragma once

#include "terminfer/program.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace terminfer {

/// Calls between defined predicates; builtins and undefined predicates are
/// not nodes.
struct CallGraph {
    std::vector<PredId> nodes;
    std::set<std::pair<PredId, PredId>> edges;

    std::vector<PredId> callees(const PredId &p) const;
};

CallGraph build_call_graph(const Program &program);

/// Strongly connected components, callees first. Members of a component are
/// sorted; among components whose callees are all placed, the one with the
/// smallest member comes first.
struct SccOrder {
    std::vector<std::vector<PredId>> sccs;
    /// Predicates that call themselves directly or through their SCC.
    std::set<PredId> recursive;

    std::size_t index_of(const PredId &p) const;
    /// One line per component: `{app/3}` or `{even/1, odd/1}`.
    std::string to_string() const;
};

SccOrder scc_order(const CallGraph &graph);

} // namespace terminfer
