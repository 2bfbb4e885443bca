#include "terminfer/interpreter.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace terminfer {

const char *to_string(Outcome o) {
    switch (o) {
    case Outcome::Exhausted:
        return "all-solutions-exhausted";
    case Outcome::DepthLimitHit:
        return "depth-limit-hit";
    case Outcome::Failure:
        return "failure";
    case Outcome::StepLimitHit:
        return "step-limit-hit";
    }
    return "?";
}

namespace {

using Addr = std::uint32_t;

struct Cell {
    enum Tag : std::uint8_t { Ref, Atom, Int, Str } tag;
    std::uint32_t arity = 0;
    /// Ref: target, Atom/Str: symbol, Int: value.
    std::int64_t value = 0;
    /// Str: first argument cell.
    Addr args = 0;
};

enum class Builtin {
    None, True, Fail, Unify, NotUnify, Identical, NotIdentical, Less, Greater, LessEq, GreaterEq, Is, ArEq, ArNe,
    ArLt, ArGt, ArLe, ArGe, Functor, Arg, Univ, Var, Nonvar, Atom, Atomic, Integer, Compound, Output
};

struct Goal {
    Addr term;
    std::size_t depth;
    /// Next goal in the continuation, or npos.
    std::size_t next;
};

struct ChoicePoint {
    std::size_t goal;
    std::size_t clause;
    std::size_t heap_top;
    std::size_t trail_top;
    std::size_t goals_top;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct ArithError {};

class Machine {
public:
    Machine(const Program &program, const QueryLimits &limits) : program_(program), limits_(limits) {
        static const std::pair<PredId, Builtin> table[] = {
            {{"true", 0}, Builtin::True},       {{"fail", 0}, Builtin::Fail},
            {{"false", 0}, Builtin::Fail},      {{"halt", 0}, Builtin::Fail},
            {{"=", 2}, Builtin::Unify},         {{"\\=", 2}, Builtin::NotUnify},
            {{"==", 2}, Builtin::Identical},    {{"\\==", 2}, Builtin::NotIdentical},
            {{"@<", 2}, Builtin::Less},         {{"@>", 2}, Builtin::Greater},
            {{"@=<", 2}, Builtin::LessEq},      {{"@>=", 2}, Builtin::GreaterEq},
            {{"is", 2}, Builtin::Is},           {{"=:=", 2}, Builtin::ArEq},
            {{"=\\=", 2}, Builtin::ArNe},       {{"<", 2}, Builtin::ArLt},
            {{">", 2}, Builtin::ArGt},          {{"=<", 2}, Builtin::ArLe},
            {{">=", 2}, Builtin::ArGe},         {{"functor", 3}, Builtin::Functor},
            {{"arg", 3}, Builtin::Arg},         {{"=..", 2}, Builtin::Univ},
            {{"var", 1}, Builtin::Var},         {{"nonvar", 1}, Builtin::Nonvar},
            {{"atom", 1}, Builtin::Atom},       {{"atomic", 1}, Builtin::Atomic},
            {{"integer", 1}, Builtin::Integer}, {{"number", 1}, Builtin::Integer},
            {{"compound", 1}, Builtin::Compound}, {{"write", 1}, Builtin::Output},
            {{"print", 1}, Builtin::Output},    {{"nl", 0}, Builtin::Output},
        };
        for (const auto &[p, b] : table)
            builtins_.emplace(p, b);
    }

    QueryResult run(const Atom &query, const SolutionCallback &on_solution) {
        std::unordered_map<std::string, Addr> vars;
        Addr q = build(query.to_term(), vars);
        goals_.push_back({q, 1, npos});
        std::vector<Addr> query_args;
        if (heap_[q].tag == Cell::Str)
            for (std::uint32_t i = 0; i < heap_[q].arity; ++i)
                query_args.push_back(heap_[q].args + i);
        QueryResult result;
        std::size_t current = 0;
        std::size_t first_clause = 0;
        for (;;) {
            if (current == npos) {
                ++result.solutions;
                if (on_solution) {
                    std::vector<Term> answer;
                    for (Addr a : query_args)
                        answer.push_back(to_term(a));
                    on_solution(answer);
                }
                if (!backtrack(current, first_clause))
                    break;
                continue;
            }
            if (++result.steps > limits_.steps) {
                result.outcome = Outcome::StepLimitHit;
                return result;
            }
            const Goal g = goals_[current];
            if (g.depth > limits_.depth) {
                result.outcome = Outcome::DepthLimitHit;
                return result;
            }
            if (solve(current, g, first_clause)) {
                first_clause = 0;
                continue;
            }
            if (!backtrack(current, first_clause))
                break;
        }
        result.outcome = result.solutions ? Outcome::Exhausted : Outcome::Failure;
        return result;
    }

private:
    // Resolves goal `g`; on success `current` becomes the new continuation.
    bool solve(std::size_t &current, const Goal &g, std::size_t first_clause) {
        Addr t = deref(g.term);
        const Cell c = heap_[t];
        if (c.tag != Cell::Atom && c.tag != Cell::Str)
            return false;
        PredId p{symbols_[static_cast<std::size_t>(c.value)], c.arity};
        if (auto it = builtins_.find(p); it != builtins_.end() && !program_.defines(p)) {
            bool ok = false;
            try {
                ok = builtin(it->second, t);
            } catch (const ArithError &) {
                ok = false;
            }
            if (ok)
                current = g.next;
            return ok;
        }
        const auto &clauses = program_.clauses(p);
        for (std::size_t k = first_clause; k < clauses.size(); ++k) {
            std::size_t heap_top = heap_.size(), trail_top = trail_.size(), goals_top = goals_.size();
            std::unordered_map<std::string, Addr> vars;
            Addr head = build(clauses[k].head.to_term(), vars);
            if (!unify(head, t)) {
                undo(heap_top, trail_top, goals_top);
                continue;
            }
            if (k + 1 < clauses.size())
                choices_.push_back({current, k + 1, heap_top, trail_top, goals_top});
            std::size_t next = g.next;
            const auto &body = clauses[k].body;
            for (auto it = body.rbegin(); it != body.rend(); ++it) {
                goals_.push_back({build(it->to_term(), vars), g.depth + 1, next});
                next = goals_.size() - 1;
            }
            current = next;
            return true;
        }
        return false;
    }

    bool backtrack(std::size_t &current, std::size_t &first_clause) {
        if (choices_.empty())
            return false;
        ChoicePoint cp = choices_.back();
        choices_.pop_back();
        undo(cp.heap_top, cp.trail_top, cp.goals_top);
        current = cp.goal;
        first_clause = cp.clause;
        return true;
    }

    void undo(std::size_t heap_top, std::size_t trail_top, std::size_t goals_top) {
        while (trail_.size() > trail_top) {
            Addr a = trail_.back();
            trail_.pop_back();
            if (a < heap_top)
                heap_[a].value = a;
        }
        heap_.resize(heap_top);
        goals_.resize(goals_top);
    }

    std::int64_t intern(const std::string &s) {
        auto [it, inserted] = symbol_ids_.try_emplace(s, symbols_.size());
        if (inserted)
            symbols_.push_back(s);
        return static_cast<std::int64_t>(it->second);
    }

    Addr fresh_var() {
        Addr a = static_cast<Addr>(heap_.size());
        heap_.push_back({Cell::Ref, 0, a, 0});
        return a;
    }

    Addr build(const Term &t, std::unordered_map<std::string, Addr> &vars) {
        switch (t.kind) {
        case Term::Kind::Variable: {
            auto it = vars.find(t.name);
            if (it != vars.end())
                return it->second;
            Addr a = fresh_var();
            vars.emplace(t.name, a);
            return a;
        }
        case Term::Kind::Integer:
            heap_.push_back({Cell::Int, 0, t.value, 0});
            return static_cast<Addr>(heap_.size() - 1);
        case Term::Kind::Constant:
            heap_.push_back({Cell::Atom, 0, intern(t.name), 0});
            return static_cast<Addr>(heap_.size() - 1);
        case Term::Kind::Compound:
            break;
        }
        Addr self = static_cast<Addr>(heap_.size());
        heap_.push_back({Cell::Str, static_cast<std::uint32_t>(t.args.size()), intern(t.name), 0});
        Addr args = static_cast<Addr>(heap_.size());
        heap_[self].args = args;
        heap_.resize(heap_.size() + t.args.size(), {Cell::Ref, 0, 0, 0});
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            Addr a = build(t.args[i], vars);
            heap_[args + i] = {Cell::Ref, 0, a, 0};
        }
        return self;
    }

    Addr make_int(std::int64_t v) {
        heap_.push_back({Cell::Int, 0, v, 0});
        return static_cast<Addr>(heap_.size() - 1);
    }

    Addr make_atom(const std::string &name) {
        heap_.push_back({Cell::Atom, 0, intern(name), 0});
        return static_cast<Addr>(heap_.size() - 1);
    }

    Addr deref(Addr a) const {
        while (heap_[a].tag == Cell::Ref && heap_[a].value != a)
            a = static_cast<Addr>(heap_[a].value);
        return a;
    }

    bool unbound(Addr a) const { return heap_[a].tag == Cell::Ref; }

    void bind(Addr var, Addr to) {
        heap_[var].value = to;
        trail_.push_back(var);
    }

    bool occurs(Addr var, Addr t) const {
        std::vector<Addr> todo{t};
        while (!todo.empty()) {
            Addr a = deref(todo.back());
            todo.pop_back();
            if (a == var)
                return true;
            if (heap_[a].tag == Cell::Str)
                for (std::uint32_t i = 0; i < heap_[a].arity; ++i)
                    todo.push_back(heap_[a].args + i);
        }
        return false;
    }

    bool unify(Addr x, Addr y) {
        std::vector<std::pair<Addr, Addr>> todo{{x, y}};
        while (!todo.empty()) {
            auto [a, b] = todo.back();
            todo.pop_back();
            a = deref(a);
            b = deref(b);
            if (a == b)
                continue;
            if (unbound(a) || unbound(b)) {
                if (!unbound(a))
                    std::swap(a, b);
                if (occurs(a, b))
                    return false;
                bind(a, b);
                continue;
            }
            const Cell &ca = heap_[a], &cb = heap_[b];
            if (ca.tag != cb.tag || ca.value != cb.value || ca.arity != cb.arity)
                return false;
            if (ca.tag == Cell::Str)
                for (std::uint32_t i = 0; i < ca.arity; ++i)
                    todo.push_back({ca.args + i, cb.args + i});
        }
        return true;
    }

    // Standard order: variables < integers < atoms < compounds.
    int compare(Addr a, Addr b) const {
        a = deref(a);
        b = deref(b);
        if (a == b)
            return 0;
        const Cell &ca = heap_[a], &cb = heap_[b];
        auto rank = [](const Cell &c) { return c.tag == Cell::Ref ? 0 : c.tag == Cell::Int ? 1 : c.tag == Cell::Atom ? 2 : 3; };
        if (rank(ca) != rank(cb))
            return rank(ca) < rank(cb) ? -1 : 1;
        switch (ca.tag) {
        case Cell::Ref:
            return a < b ? -1 : 1;
        case Cell::Int:
            return ca.value < cb.value ? -1 : ca.value > cb.value ? 1 : 0;
        case Cell::Atom: {
            int r = symbols_[static_cast<std::size_t>(ca.value)].compare(symbols_[static_cast<std::size_t>(cb.value)]);
            return r < 0 ? -1 : r > 0 ? 1 : 0;
        }
        case Cell::Str:
            break;
        }
        if (ca.arity != cb.arity)
            return ca.arity < cb.arity ? -1 : 1;
        if (ca.value != cb.value) {
            int r = symbols_[static_cast<std::size_t>(ca.value)].compare(symbols_[static_cast<std::size_t>(cb.value)]);
            return r < 0 ? -1 : 1;
        }
        for (std::uint32_t i = 0; i < ca.arity; ++i)
            if (int r = compare(ca.args + i, cb.args + i))
                return r;
        return 0;
    }

    std::int64_t eval(Addr a) const {
        a = deref(a);
        const Cell &c = heap_[a];
        if (c.tag == Cell::Int)
            return c.value;
        if (c.tag != Cell::Str || c.arity > 2)
            throw ArithError{};
        const std::string &op = symbols_[static_cast<std::size_t>(c.value)];
        std::int64_t x = eval(c.args);
        if (c.arity == 1) {
            if (op == "-")
                return -x;
            if (op == "+")
                return x;
            if (op == "abs")
                return x < 0 ? -x : x;
            throw ArithError{};
        }
        std::int64_t y = eval(c.args + 1);
        if (op == "+")
            return x + y;
        if (op == "-")
            return x - y;
        if (op == "*")
            return x * y;
        if (op == "min")
            return std::min(x, y);
        if (op == "max")
            return std::max(x, y);
        if (y == 0 && (op == "//" || op == "/" || op == "mod" || op == "rem" || op == "div"))
            throw ArithError{};
        if (op == "//" || op == "/")
            return x / y;
        if (op == "rem")
            return x % y;
        if (op == "mod" || op == "div") {
            std::int64_t m = ((x % y) + y) % y;
            return op == "mod" ? m : (x - m) / y;
        }
        if (op == ">>")
            return x >> y;
        if (op == "<<")
            return x << y;
        throw ArithError{};
    }

    bool builtin(Builtin b, Addr t) {
        const Cell c = heap_[t];
        auto arg = [&](std::uint32_t i) { return deref(c.args + i); };
        switch (b) {
        case Builtin::True:
        case Builtin::Output:
            return true;
        case Builtin::Fail:
        case Builtin::None:
            return false;
        case Builtin::Unify:
            return unify(arg(0), arg(1));
        case Builtin::NotUnify: {
            std::size_t heap_top = heap_.size(), trail_top = trail_.size();
            bool u = unify(arg(0), arg(1));
            undo(heap_top, trail_top, goals_.size());
            return !u;
        }
        case Builtin::Identical:
            return compare(arg(0), arg(1)) == 0;
        case Builtin::NotIdentical:
            return compare(arg(0), arg(1)) != 0;
        case Builtin::Less:
            return compare(arg(0), arg(1)) < 0;
        case Builtin::Greater:
            return compare(arg(0), arg(1)) > 0;
        case Builtin::LessEq:
            return compare(arg(0), arg(1)) <= 0;
        case Builtin::GreaterEq:
            return compare(arg(0), arg(1)) >= 0;
        case Builtin::Is:
            return unify(arg(0), make_int(eval(arg(1))));
        case Builtin::ArEq:
            return eval(arg(0)) == eval(arg(1));
        case Builtin::ArNe:
            return eval(arg(0)) != eval(arg(1));
        case Builtin::ArLt:
            return eval(arg(0)) < eval(arg(1));
        case Builtin::ArGt:
            return eval(arg(0)) > eval(arg(1));
        case Builtin::ArLe:
            return eval(arg(0)) <= eval(arg(1));
        case Builtin::ArGe:
            return eval(arg(0)) >= eval(arg(1));
        case Builtin::Var:
            return unbound(arg(0));
        case Builtin::Nonvar:
            return !unbound(arg(0));
        case Builtin::Atom:
            return heap_[arg(0)].tag == Cell::Atom;
        case Builtin::Atomic:
            return heap_[arg(0)].tag == Cell::Atom || heap_[arg(0)].tag == Cell::Int;
        case Builtin::Integer:
            return heap_[arg(0)].tag == Cell::Int;
        case Builtin::Compound:
            return heap_[arg(0)].tag == Cell::Str;
        case Builtin::Functor:
            return functor(arg(0), arg(1), arg(2));
        case Builtin::Arg: {
            Addr n = arg(0), s = arg(1);
            if (heap_[n].tag != Cell::Int || heap_[s].tag != Cell::Str)
                return false;
            std::int64_t k = heap_[n].value;
            if (k < 1 || k > heap_[s].arity)
                return false;
            return unify(heap_[s].args + static_cast<Addr>(k - 1), arg(2));
        }
        case Builtin::Univ:
            return univ(arg(0), arg(1));
        }
        return false;
    }

    bool functor(Addr t, Addr name, Addr arity) {
        const Cell c = heap_[t];
        if (c.tag != Cell::Ref) {
            Addr n = c.tag == Cell::Int ? make_int(c.value)
                                        : make_atom(symbols_[static_cast<std::size_t>(c.value)]);
            return unify(name, n) && unify(arity, make_int(c.tag == Cell::Str ? c.arity : 0));
        }
        if (heap_[arity].tag != Cell::Int || unbound(name))
            return false;
        std::int64_t k = heap_[arity].value;
        if (k < 0)
            return false;
        if (k == 0)
            return unify(t, name);
        if (heap_[name].tag != Cell::Atom)
            return false;
        Addr s = static_cast<Addr>(heap_.size());
        heap_.push_back({Cell::Str, static_cast<std::uint32_t>(k), heap_[name].value, s + 1});
        for (std::int64_t i = 0; i < k; ++i)
            fresh_var();
        return unify(t, s);
    }

    bool univ(Addr t, Addr list) {
        const Cell c = heap_[t];
        if (c.tag != Cell::Ref) {
            std::vector<Addr> items;
            if (c.tag == Cell::Str) {
                items.push_back(make_atom(symbols_[static_cast<std::size_t>(c.value)]));
                for (std::uint32_t i = 0; i < c.arity; ++i)
                    items.push_back(heap_[t].args + i);
            } else {
                items.push_back(t);
            }
            Addr l = make_atom("[]");
            for (auto it = items.rbegin(); it != items.rend(); ++it) {
                Addr cons = static_cast<Addr>(heap_.size());
                heap_.push_back({Cell::Str, 2, intern("."), cons + 1});
                heap_.push_back({Cell::Ref, 0, *it, 0});
                heap_.push_back({Cell::Ref, 0, l, 0});
                l = cons;
            }
            return unify(list, l);
        }
        std::vector<Addr> items;
        Addr l = deref(list);
        while (heap_[l].tag == Cell::Str && heap_[l].arity == 2 && symbols_[static_cast<std::size_t>(heap_[l].value)] == ".") {
            items.push_back(deref(heap_[l].args));
            l = deref(heap_[l].args + 1);
        }
        if (!(heap_[l].tag == Cell::Atom && symbols_[static_cast<std::size_t>(heap_[l].value)] == "[]") || items.empty())
            return false;
        if (items.size() == 1)
            return unify(t, items[0]);
        if (heap_[items[0]].tag != Cell::Atom)
            return false;
        Addr s = static_cast<Addr>(heap_.size());
        heap_.push_back({Cell::Str, static_cast<std::uint32_t>(items.size() - 1), heap_[items[0]].value, s + 1});
        for (std::size_t i = 1; i < items.size(); ++i)
            heap_.push_back({Cell::Ref, 0, items[i], 0});
        return unify(t, s);
    }

    Term to_term(Addr a) const {
        a = deref(a);
        const Cell &c = heap_[a];
        switch (c.tag) {
        case Cell::Ref:
            return Term::variable("_" + std::to_string(a));
        case Cell::Int:
            return Term::integer(c.value);
        case Cell::Atom:
            return Term::constant(symbols_[static_cast<std::size_t>(c.value)]);
        case Cell::Str:
            break;
        }
        std::vector<Term> args;
        for (std::uint32_t i = 0; i < c.arity; ++i)
            args.push_back(to_term(c.args + i));
        return Term::compound(symbols_[static_cast<std::size_t>(c.value)], std::move(args));
    }

    const Program &program_;
    QueryLimits limits_;
    std::map<PredId, Builtin> builtins_;
    std::vector<Cell> heap_;
    std::vector<Addr> trail_;
    std::vector<Goal> goals_;
    std::vector<ChoicePoint> choices_;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::size_t> symbol_ids_;
};

} // namespace

QueryResult run_query(const Program &program, const Atom &query, const QueryLimits &limits,
                      const SolutionCallback &on_solution) {
    return Machine(program, limits).run(query, on_solution);
}

} // namespace terminfer
