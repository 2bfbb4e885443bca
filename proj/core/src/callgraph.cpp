#include "terminfer/callgraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace terminfer {

std::vector<PredId> CallGraph::callees(const PredId &p) const {
    std::vector<PredId> out;
    for (auto it = edges.lower_bound({p, PredId{}}); it != edges.end() && it->first == p; ++it)
        out.push_back(it->second);
    return out;
}

CallGraph build_call_graph(const Program &program) {
    CallGraph g;
    g.nodes = program.predicates();
    for (const auto &p : g.nodes)
        for (const auto &c : program.clauses(p))
            for (const auto &b : c.body)
                if (program.defines(b.pred))
                    g.edges.insert({p, b.pred});
    return g;
}

std::size_t SccOrder::index_of(const PredId &p) const {
    for (std::size_t i = 0; i < sccs.size(); ++i)
        if (std::binary_search(sccs[i].begin(), sccs[i].end(), p))
            return i;
    throw std::out_of_range("predicate not in call graph: " + p.to_string());
}

std::string SccOrder::to_string() const {
    std::string s;
    for (const auto &scc : sccs) {
        s += "{";
        for (std::size_t i = 0; i < scc.size(); ++i)
            s += (i ? ", " : "") + scc[i].to_string();
        s += "}\n";
    }
    return s;
}

SccOrder scc_order(const CallGraph &graph) {
    // Tarjan.
    std::map<PredId, int> index, low;
    std::vector<PredId> stack;
    std::set<PredId> on_stack;
    std::vector<std::vector<PredId>> components;
    int counter = 0;
    std::function<void(const PredId &)> visit = [&](const PredId &v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto &w : graph.callees(v)) {
            if (!index.count(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack.count(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<PredId> scc;
            PredId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                scc.push_back(w);
            } while (w != v);
            std::sort(scc.begin(), scc.end());
            components.push_back(std::move(scc));
        }
    };
    for (const auto &v : graph.nodes)
        if (!index.count(v))
            visit(v);

    // Kahn over the condensation, callees first.
    std::map<PredId, std::size_t> component_of;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (const auto &p : components[i])
            component_of[p] = i;
    std::vector<std::set<std::size_t>> callers(components.size());
    std::vector<std::size_t> pending(components.size(), 0);
    SccOrder order;
    for (const auto &[from, to] : graph.edges) {
        std::size_t a = component_of.at(from), b = component_of.at(to);
        if (a == b) {
            order.recursive.insert(from);
            order.recursive.insert(to);
        } else if (callers[b].insert(a).second) {
            ++pending[a];
        }
    }
    auto later = [&](std::size_t a, std::size_t b) { return components[b].front() < components[a].front(); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
    for (std::size_t i = 0; i < components.size(); ++i)
        if (pending[i] == 0)
            ready.push(i);
    while (!ready.empty()) {
        std::size_t c = ready.top();
        ready.pop();
        order.sccs.push_back(components[c]);
        for (auto caller : callers[c])
            if (--pending[caller] == 0)
                ready.push(caller);
    }
    return order;
}

} // namespace terminfer
