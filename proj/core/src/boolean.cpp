#include "terminfer/boolean.hpp"

#include "terminfer/error.hpp"

#include <algorithm>

namespace terminfer {

const std::vector<BoolClause> &BoolProgram::clauses_of(const PredId &p) const {
    static const std::vector<BoolClause> none;
    auto it = clauses.find(p);
    return it == clauses.end() ? none : it->second;
}

BoolFun boolean_image(const LinExpr &e) {
    BoolFun f = BoolFun::constant(true);
    for (const auto &[v, c] : e.coefficients())
        f = conj(f, BoolFun::variable(v));
    return f;
}

namespace {

BoolAtom abstract_atom(const NumAtom &a) {
    BoolAtom out{a.pred, {}};
    for (const auto &e : a.args)
        out.args.push_back(boolean_image(e));
    return out;
}

// a = b as (vars of the positive side) <-> (vars of the negative side).
BoolFun equality_image(const LinExpr &e) {
    BoolFun pos = BoolFun::constant(true), neg = BoolFun::constant(true);
    for (const auto &[v, c] : e.coefficients())
        (c > 0 ? pos : neg) = conj(c > 0 ? pos : neg, BoolFun::variable(v));
    return iff(pos, neg);
}

BoolFun instantiate(const BoolFun &f, const std::vector<BoolFun> &args) {
    std::map<std::string, BoolFun> sub;
    for (std::size_t i = 0; i < args.size(); ++i)
        sub.emplace("x" + std::to_string(i + 1), args[i]);
    return f.compose(sub);
}

BoolFun head_equations(const BoolClause &c) {
    BoolFun h = c.constraint;
    for (std::size_t i = 0; i < c.head.args.size(); ++i)
        h = conj(h, iff(BoolFun::variable("x" + std::to_string(i + 1)), c.head.args[i]));
    return h;
}

BoolFun post_of(const PredId &p, const BoolProgram &program, const BoolMap &posts) {
    if (auto it = posts.find(p); it != posts.end())
        return it->second;
    if (auto it = program.builtin_posts.find(p); it != program.builtin_posts.end())
        return it->second;
    return BoolFun::constant(false);
}

BoolFun pre_of(const PredId &p, const BoolProgram &program, const BoolMap &pre) {
    if (auto it = pre.find(p); it != pre.end())
        return it->second;
    if (auto it = program.builtin_pres.find(p); it != program.builtin_pres.end())
        return it->second;
    return BoolFun::constant(true);
}

std::set<std::string> clause_variables(const BoolClause &c) { return {c.variables.begin(), c.variables.end()}; }

} // namespace

BoolProgram abstract_boolean(const NumProgram &program, const BuiltinTable &builtins) {
    BoolProgram out;
    out.predicates = program.predicates;
    for (const auto &p : program.predicates) {
        for (const auto &c : program.clauses_of(p)) {
            BoolClause bc;
            bc.head = abstract_atom(c.head);
            for (const auto &b : c.body)
                bc.body.push_back(abstract_atom(b));
            for (const auto &k : c.constraint.constraints())
                if (k.relation == Relation::Eq)
                    bc.constraint = conj(bc.constraint, equality_image(k.expr));
            if (c.constraint.is_empty())
                bc.constraint = BoolFun::constant(false);
            bc.variables = c.variables;
            out.clauses[p].push_back(std::move(bc));
        }
    }
    for (const auto &[p, e] : builtins.entries()) {
        out.builtin_posts.emplace(p, e.post);
        out.builtin_pres.emplace(p, e.pre);
    }
    return out;
}

std::string to_string(const BoolMap &m, const std::vector<PredId> &order) {
    std::string s;
    for (const auto &p : order)
        if (auto it = m.find(p); it != m.end())
            s += p.to_string() + ": " + it->second.to_string() + "\n";
    return s;
}

BoolFun boolean_consequence(const BoolClause &c, const BoolProgram &program, const BoolMap &posts) {
    BoolFun f = head_equations(c);
    for (const auto &b : c.body) {
        if (f.is_false())
            break;
        f = conj(f, instantiate(post_of(b.pred, program, posts), b.args));
    }
    return f.exists(clause_variables(c));
}

BooleanResult compute_boolean_model(const BoolProgram &program, const SccOrder &order, std::int64_t fuel) {
    BooleanResult result;
    for (const auto &scc : order.sccs) {
        for (const auto &p : scc)
            result.map[p] = BoolFun::constant(false);
        try {
            FuelScope scope(fuel);
            for (bool changed = true; changed;) {
                changed = false;
                BoolMap next;
                for (const auto &p : scc) {
                    BoolFun y = result.map.at(p);
                    for (const auto &c : program.clauses_of(p))
                        y = disj(y, boolean_consequence(c, program, result.map));
                    if (!(y == result.map.at(p)))
                        changed = true;
                    next[p] = std::move(y);
                }
                for (auto &[p, f] : next)
                    result.map[p] = std::move(f);
                charge_fuel();
            }
        } catch (const BudgetExceeded &) {
            for (const auto &p : scc)
                result.map[p] = BoolFun::constant(true);
            result.diagnostics.push_back({scc, "boolean model", "fuel exhausted, using 1"});
        }
    }
    return result;
}

BoolMap boolean_level_mapping(const LevelMapping &lm) {
    BoolMap out;
    for (const auto &s : lm.sccs) {
        for (const auto &p : s.scc) {
            if (s.status == SccMapping::Status::Failed) {
                out[p] = BoolFun::constant(false);
                continue;
            }
            auto exprs = lm.expressions(p);
            if (exprs.empty()) {
                out[p] = BoolFun::constant(true);
                continue;
            }
            BoolFun f = BoolFun::constant(false);
            for (const auto &e : exprs) {
                BoolFun term = BoolFun::constant(true);
                for (const auto &[v, c] : e.coefficients())
                    if (c > 0)
                        term = conj(term, BoolFun::variable(v));
                f = disj(f, term);
            }
            out[p] = f;
        }
    }
    return out;
}

BoolMap termination_step(const std::vector<PredId> &scc, const BoolProgram &program, const BoolMap &model,
                         const BoolMap &blm, const BoolMap &pre) {
    BoolMap out;
    for (const auto &p : scc) {
        auto lm = blm.find(p);
        BoolFun t = lm == blm.end() ? BoolFun::constant(true) : lm->second;
        for (const auto &c : program.clauses_of(p)) {
            auto locals = clause_variables(c);
            BoolFun context = head_equations(c);
            for (const auto &b : c.body) {
                if (t.is_false() || context.is_false())
                    break;
                BoolFun call = instantiate(pre_of(b.pred, program, pre), b.args);
                t = conj(t, implies(context, call).forall(locals));
                context = conj(context, instantiate(post_of(b.pred, program, model), b.args));
            }
        }
        out[p] = t;
    }
    return out;
}

BooleanResult compute_termination_conditions(const BoolProgram &program, const BoolMap &model, const BoolMap &blm,
                                             const SccOrder &order, std::int64_t fuel) {
    BooleanResult result;
    for (const auto &scc : order.sccs) {
        for (const auto &p : scc)
            result.map[p] = BoolFun::constant(true);
        try {
            FuelScope scope(fuel);
            for (;;) {
                BoolMap next = termination_step(scc, program, model, blm, result.map);
                bool stable = std::all_of(scc.begin(), scc.end(), [&](const PredId &p) {
                    return next.at(p) == result.map.at(p);
                });
                for (auto &[p, f] : next)
                    result.map[p] = std::move(f);
                if (stable)
                    break;
                charge_fuel();
            }
        } catch (const BudgetExceeded &) {
            for (const auto &p : scc)
                result.map[p] = BoolFun::constant(false);
            result.diagnostics.push_back({scc, "termination conditions", "fuel exhausted, using 0"});
        }
    }
    return result;
}

} // namespace terminfer
