#include "terminfer/abstraction.hpp"

namespace terminfer {

LinExpr TermSizeNorm::size(const Term &t) const {
    switch (t.kind) {
    case Term::Kind::Variable:
        return LinExpr::variable(t.name);
    case Term::Kind::Constant:
    case Term::Kind::Integer:
        return LinExpr(0L);
    case Term::Kind::Compound:
        break;
    }
    LinExpr e(1L);
    for (const auto &a : t.args)
        e += size(a);
    return e;
}

LinExpr term_size(const Term &t) { return TermSizeNorm().size(t); }

std::string NumAtom::to_string() const {
    std::string s = pred.name;
    if (args.empty())
        return s;
    s += "(";
    for (std::size_t i = 0; i < args.size(); ++i)
        s += (i ? ", " : "") + args[i].to_string();
    return s + ")";
}

std::string NumClause::to_string() const {
    std::string s = head.to_string();
    std::string sep = " :- ";
    if (!constraint.is_universe()) {
        s += sep + constraint.to_string();
        sep = ", ";
    }
    for (const auto &b : body) {
        s += sep + b.to_string();
        sep = ", ";
    }
    return s + ".";
}

const std::vector<NumClause> &NumProgram::clauses_of(const PredId &p) const {
    static const std::vector<NumClause> none;
    auto it = clauses.find(p);
    return it == clauses.end() ? none : it->second;
}

std::string NumProgram::to_string() const {
    std::string s;
    for (const auto &p : predicates)
        for (const auto &c : clauses_of(p))
            s += c.to_string() + "\n";
    return s;
}

namespace {

NumAtom abstract_atom(const Atom &a, const Norm &norm) {
    NumAtom out{a.pred, {}};
    for (const auto &t : a.args)
        out.args.push_back(norm.size(t));
    return out;
}

} // namespace

NumClause abstract_clause(const Clause &c, const Norm &norm) {
    NumClause out;
    out.head = abstract_atom(c.head, norm);
    for (const auto &b : c.body)
        out.body.push_back(abstract_atom(b, norm));
    out.variables = c.variables();
    out.constraint = Polyhedron::universe(out.variables);
    return out;
}

NumProgram abstract_program(const Program &p, const Norm &norm) {
    NumProgram out;
    out.predicates = p.predicates();
    for (const auto &pred : out.predicates)
        for (const auto &c : p.clauses(pred))
            out.clauses[pred].push_back(abstract_clause(c, norm));
    for (const auto &[pred, entry] : p.builtins().entries())
        out.builtins.emplace(pred, entry.num);
    return out;
}

} // namespace terminfer
