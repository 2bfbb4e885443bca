#include "terminfer/program.hpp"

#include "terminfer/error.hpp"
#include "terminfer/reader.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace terminfer {

Atom Atom::from_term(const Term &t) { return {{t.name, t.args.size()}, t.args}; }

Term Atom::to_term() const { return Term::compound(pred.name, args); }

std::vector<std::string> Clause::variables() const {
    std::vector<std::string> out;
    for (const auto &a : head.args)
        a.collect_variables(out);
    for (const auto &b : body)
        for (const auto &a : b.args)
            a.collect_variables(out);
    return out;
}

std::string Clause::to_string() const {
    std::string s = head.to_string();
    for (std::size_t i = 0; i < body.size(); ++i)
        s += (i ? ", " : " :- ") + body[i].to_string();
    return s + ".";
}

void Program::add_clause(Clause c, bool auxiliary) {
    const PredId p = c.head.pred;
    if (!auxiliary && builtins_.contains(p))
        throw ProgramError("line " + std::to_string(c.line) + ": cannot redefine imported predicate " + p.to_string());
    auto [it, inserted] = clauses_.try_emplace(p);
    if (inserted) {
        order_.push_back(p);
        if (auxiliary)
            auxiliary_.insert(p);
    }
    it->second.push_back(std::move(c));
}

std::vector<PredId> Program::user_predicates() const {
    std::vector<PredId> out;
    for (const auto &p : order_)
        if (!auxiliary_.count(p))
            out.push_back(p);
    return out;
}

const std::vector<Clause> &Program::clauses(const PredId &p) const {
    static const std::vector<Clause> none;
    auto it = clauses_.find(p);
    return it == clauses_.end() ? none : it->second;
}

std::vector<PredId> Program::undefined_predicates() const {
    std::vector<PredId> out;
    for (const auto &p : order_)
        for (const auto &c : clauses_.at(p))
            for (const auto &b : c.body)
                if (!defines(b.pred) && !builtins_.contains(b.pred) &&
                    std::find(out.begin(), out.end(), b.pred) == out.end())
                    out.push_back(b.pred);
    return out;
}

std::string Program::to_string() const {
    std::string s;
    for (const auto &p : order_)
        for (const auto &c : clauses_.at(p))
            s += c.to_string() + "\n";
    return s;
}

namespace {

void count_occurrences(const Term &t, std::map<std::string, int> &counts) {
    if (t.is_variable()) {
        ++counts[t.name];
        return;
    }
    for (const auto &a : t.args)
        count_occurrences(a, counts);
}

class Normalizer {
public:
    Normalizer(const Term &head, const Term &body, int line, const std::function<std::string()> &fresh)
        : head_(head), body_(body), line_(line), fresh_(fresh) {
        count_occurrences(head, counts_);
        count_occurrences(body, counts_);
    }

    std::vector<std::pair<Clause, bool>> run() {
        if (!head_.is_callable())
            fail("clause head " + head_.to_string() + " is not callable");
        for (const char *c : {",", ";", "->", "*->", "\\+", ":-"})
            if (head_.name == c)
                fail("clause head " + head_.to_string() + " is a control construct");
        Clause c{Atom::from_term(head_), {}, line_};
        goal(body_, c.body);
        out_.insert(out_.begin(), {std::move(c), false});
        return std::move(out_);
    }

private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ProgramError("line " + std::to_string(line_) + ": " + msg);
    }

    void goal(const Term &g, std::vector<Atom> &body) {
        if (g.is_variable())
            fail("variable goal " + g.name + " is not supported");
        if (!g.is_callable())
            fail("goal " + g.to_string() + " is not callable");
        if (g.is(",", 2)) {
            goal(g.args[0], body);
            goal(g.args[1], body);
        } else if (g.is("true", 0) || g.is("!", 0)) {
        } else if (g.is(";", 2)) {
            std::vector<Term> branches;
            const Term *t = &g;
            while (t->is(";", 2)) {
                branches.push_back(branch(t->args[0]));
                t = &t->args[1];
            }
            branches.push_back(branch(*t));
            body.push_back(auxiliary(g, branches));
        } else if (g.is("->", 2) || g.is("*->", 2)) {
            goal(g.args[0], body);
            goal(g.args[1], body);
        } else if (g.is("\\+", 1) || g.is("not", 1)) {
            body.push_back(auxiliary(g, {Term::compound(",", {g.args[0], Term::constant("false")}),
                                         Term::constant("true")}));
        } else if (g.name == "call" && !g.args.empty()) {
            Term inner = g.args[0];
            if (inner.is_variable())
                fail("call/" + std::to_string(g.args.size()) + " with an unbound goal is not supported");
            if (!inner.is_callable())
                fail("goal " + inner.to_string() + " is not callable");
            std::vector<Term> args = inner.args;
            args.insert(args.end(), g.args.begin() + 1, g.args.end());
            goal(Term::compound(inner.name, std::move(args)), body);
        } else if (g.args.size() == 1 &&
                   (g.name == "assert" || g.name == "asserta" || g.name == "assertz" || g.name == "retract")) {
            fail(g.name + "/1 is not supported");
        } else {
            body.push_back(Atom::from_term(g));
        }
    }

    static Term branch(const Term &t) {
        if (t.is("->", 2) || t.is("*->", 2))
            return Term::compound(",", {t.args[0], t.args[1]});
        return t;
    }

    // Fresh predicate over the variables `construct` shares with the rest of
    // the clause, one clause per branch.
    Atom auxiliary(const Term &construct, const std::vector<Term> &branches) {
        std::map<std::string, int> inner;
        count_occurrences(construct, inner);
        std::vector<Term> args;
        for (const auto &v : construct.variables())
            if (counts_[v] > inner[v])
                args.push_back(Term::variable(v));
        Term head = Term::compound(fresh_(), args);
        for (const auto &b : branches)
            for (auto &[c, aux] : normalize_clause(head, b, line_, fresh_))
                out_.emplace_back(std::move(c), true);
        return Atom::from_term(head);
    }

    const Term &head_;
    const Term &body_;
    int line_;
    const std::function<std::string()> &fresh_;
    std::map<std::string, int> counts_;
    std::vector<std::pair<Clause, bool>> out_;
};

} // namespace

std::vector<std::pair<Clause, bool>> normalize_clause(const Term &head, const Term &body, int line,
                                                      const std::function<std::string()> &fresh) {
    return Normalizer(head, body, line, fresh).run();
}

Program parse_program(const std::string &text, BuiltinTable builtins) {
    auto terms = read_terms(text);
    std::set<std::string> names;
    for (const auto &rt : terms) {
        const Term &h = rt.term.is(":-", 2) ? rt.term.args[0] : rt.term;
        names.insert(h.name);
    }
    int counter = 0;
    std::function<std::string()> fresh = [&] {
        std::string n;
        do
            n = "$aux" + std::to_string(counter++);
        while (names.count(n));
        return n;
    };
    Program prog(std::move(builtins));
    for (const auto &rt : terms) {
        const Term &t = rt.term;
        auto where = "line " + std::to_string(rt.line) + ": ";
        if (t.is(":-", 1) || t.is("?-", 1))
            throw ProgramError(where + "directives are not supported");
        if (t.is("-->", 2))
            throw ProgramError(where + "grammar rules are not supported");
        std::vector<std::pair<Clause, bool>> clauses =
            t.is(":-", 2) ? normalize_clause(t.args[0], t.args[1], rt.line, fresh)
                          : normalize_clause(t, Term::constant("true"), rt.line, fresh);
        for (auto &[c, aux] : clauses)
            prog.add_clause(std::move(c), aux);
    }
    return prog;
}

Program load_program(const std::string &path, BuiltinTable builtins) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_program(ss.str(), std::move(builtins));
}

} // namespace terminfer
