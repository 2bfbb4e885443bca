#include "terminfer/numeric.hpp"

#include "terminfer/error.hpp"

namespace terminfer {

std::string Diagnostic::to_string() const {
    std::string s = step + " {";
    for (std::size_t i = 0; i < scc.size(); ++i)
        s += (i ? ", " : "") + scc[i].to_string();
    return s + "}: " + note;
}

const Polyhedron *NumericModel::find(const PredId &p) const {
    auto it = posts.find(p);
    return it == posts.end() ? nullptr : &it->second;
}

std::string NumericModel::to_string(const std::vector<PredId> &order) const {
    std::string s;
    for (const auto &p : order)
        if (const Polyhedron *post = find(p))
            s += p.to_string() + ": " + post->to_string() + "\n";
    return s;
}

ModelLookup model_lookup(const NumProgram &program, const NumericModel &model) {
    return [&program, &model](const PredId &p) {
        if (const Polyhedron *post = model.find(p))
            return *post;
        auto it = program.builtins.find(p);
        if (it != program.builtins.end())
            return it->second;
        return Polyhedron::empty(argument_names(p.arity));
    };
}

std::vector<LinConstraint> instantiate(const Polyhedron &post, const std::vector<LinExpr> &args) {
    std::map<std::string, LinExpr> sub;
    for (std::size_t i = 0; i < args.size(); ++i)
        sub.emplace("x" + std::to_string(i + 1), args[i]);
    std::vector<LinConstraint> out;
    for (const auto &c : post.constraints())
        out.push_back({c.expr.substitute(sub), c.relation});
    return out;
}

namespace {

std::vector<LinConstraint> context_constraints(const NumClause &c, std::size_t count, const ModelLookup &lookup) {
    std::vector<LinConstraint> cs = c.constraint.constraints();
    for (std::size_t k = 0; k < count; ++k) {
        auto more = instantiate(lookup(c.body[k].pred), c.body[k].args);
        cs.insert(cs.end(), more.begin(), more.end());
    }
    return cs;
}

} // namespace

Polyhedron body_context(const NumClause &c, std::size_t count, const ModelLookup &lookup) {
    return Polyhedron::from_constraints(c.variables, context_constraints(c, count, lookup));
}

Polyhedron clause_consequence(const NumClause &c, const ModelLookup &lookup) {
    auto heads = argument_names(c.head.args.size());
    auto cs = context_constraints(c, c.body.size(), lookup);
    for (std::size_t i = 0; i < heads.size(); ++i)
        cs.push_back(LinConstraint::eq(LinExpr::variable(heads[i]), c.head.args[i]));
    std::vector<std::string> dims = c.variables;
    dims.insert(dims.end(), heads.begin(), heads.end());
    return Polyhedron::from_constraints(dims, cs).project(heads);
}

NumericResult compute_numeric_model(const NumProgram &program, const SccOrder &order, const NumericParams &params) {
    NumericResult result;
    NumericModel &model = result.model;
    for (const auto &scc : order.sccs) {
        std::map<PredId, Polyhedron> current;
        for (const auto &p : scc)
            current[p] = Polyhedron::empty(argument_names(p.arity));
        ModelLookup base = model_lookup(program, model);
        ModelLookup lookup = [&](const PredId &p) {
            auto it = current.find(p);
            return it != current.end() ? it->second : base(p);
        };
        try {
            FuelScope fuel(params.fuel);
            for (int round = 0;; ++round) {
                std::map<PredId, Polyhedron> next;
                bool stable = true;
                for (const auto &p : scc) {
                    Polyhedron y = current.at(p);
                    for (const auto &c : program.clauses_of(p))
                        y = y.hull(clause_consequence(c, lookup));
                    if (!(y == current.at(p)))
                        stable = false;
                    next[p] = round < params.widen_delay ? y : current.at(p).widen(y);
                }
                if (stable)
                    break;
                current = std::move(next);
                charge_fuel();
            }
        } catch (const BudgetExceeded &) {
            for (const auto &p : scc)
                current[p] = Polyhedron::universe(argument_names(p.arity));
            result.diagnostics.push_back({scc, "numeric model", "fuel exhausted, using the universe"});
        }
        for (auto &[p, post] : current)
            model.posts[p] = std::move(post);
    }
    return result;
}

} // namespace terminfer
