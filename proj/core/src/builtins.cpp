#include "terminfer/builtins.hpp"

#include "terminfer/error.hpp"
#include "terminfer/reader.hpp"

#include <fstream>
#include <sstream>

namespace terminfer {

std::string PredId::to_string() const { return quote_atom(name) + "/" + std::to_string(arity); }

std::vector<std::string> argument_names(std::size_t arity) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= arity; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

LinExpr x(int i) { return LinExpr::variable("x" + std::to_string(i)); }

BuiltinEntry entry(std::size_t arity, std::vector<LinConstraint> num, const std::string &post,
                   const std::string &pre = "1") {
    return {Polyhedron::from_constraints(argument_names(arity), num), parse_formula(post), parse_formula(pre)};
}

BuiltinEntry failing(std::size_t arity) {
    return {Polyhedron::empty(argument_names(arity)), BoolFun::constant(false), BoolFun::constant(true)};
}

// Index of an argument variable `x<k>` with 1 <= k <= arity, else 0.
std::size_t argument_index(const std::string &name, std::size_t arity) {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0')
        return 0;
    std::size_t k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            return 0;
        k = k * 10 + static_cast<std::size_t>(name[i] - '0');
        if (k > arity)
            return 0;
    }
    return k;
}

[[noreturn]] void table_error(int line, const std::string &msg) {
    throw TableError("builtin table line " + std::to_string(line) + ": " + msg);
}

LinExpr linear(const Term &t, std::size_t arity, int line) {
    if (t.kind == Term::Kind::Integer)
        return LinExpr(static_cast<long>(t.value));
    if (t.kind == Term::Kind::Constant) {
        if (std::size_t k = argument_index(t.name, arity))
            return LinExpr::variable("x" + std::to_string(k));
        table_error(line, "unknown argument variable " + t.name);
    }
    if (t.is("+", 2))
        return linear(t.args[0], arity, line) + linear(t.args[1], arity, line);
    if (t.is("-", 2))
        return linear(t.args[0], arity, line) - linear(t.args[1], arity, line);
    if (t.is("-", 1))
        return -linear(t.args[0], arity, line);
    if (t.is("*", 2)) {
        LinExpr a = linear(t.args[0], arity, line), b = linear(t.args[1], arity, line);
        if (a.is_constant())
            return b * a.constant();
        if (b.is_constant())
            return a * b.constant();
        table_error(line, "non-linear term " + t.to_string());
    }
    table_error(line, "ill-formed linear expression " + t.to_string());
}

LinConstraint constraint(const Term &t, std::size_t arity, int line) {
    auto side = [&](int i) { return linear(t.args[i], arity, line); };
    if (t.is("=", 2))
        return LinConstraint::eq(side(0), side(1));
    if (t.is("=<", 2))
        return LinConstraint::le(side(0), side(1));
    if (t.is(">=", 2))
        return LinConstraint::ge(side(0), side(1));
    table_error(line, "ill-formed constraint " + t.to_string());
}

BoolFun formula(const Term &t, std::size_t arity, int line) {
    if (t.kind == Term::Kind::Integer && (t.value == 0 || t.value == 1))
        return BoolFun::constant(t.value == 1);
    if (t.kind == Term::Kind::Constant) {
        if (std::size_t k = argument_index(t.name, arity))
            return BoolFun::variable("x" + std::to_string(k));
        table_error(line, "unknown argument variable " + t.name);
    }
    if (t.is("*", 2))
        return conj(formula(t.args[0], arity, line), formula(t.args[1], arity, line));
    if (t.is("+", 2))
        return disj(formula(t.args[0], arity, line), formula(t.args[1], arity, line));
    if (t.is("<->", 2))
        return iff(formula(t.args[0], arity, line), formula(t.args[1], arity, line));
    table_error(line, "ill-formed boolean formula " + t.to_string());
}

} // namespace

BuiltinTable BuiltinTable::standard() {
    BuiltinTable t;
    t.define({"true", 0}, entry(0, {}, "1"));
    t.define({"fail", 0}, failing(0));
    t.define({"false", 0}, failing(0));
    t.define({"halt", 0}, failing(0));
    for (const char *eq : {"=", "=="})
        t.define({eq, 2}, entry(2, {LinConstraint::eq(x(1), x(2))}, "x1 <-> x2"));
    for (const char *cmp : {"\\=", "\\==", "@<", "@>", "@=<", "@>="})
        t.define({cmp, 2}, entry(2, {}, "1"));
    t.define({"is", 2}, entry(2, {}, "x1"));
    for (const char *cmp : {"=:=", "=\\=", "<", ">", "=<", ">="})
        t.define({cmp, 2}, entry(2, {}, "x1*x2"));
    t.define({"functor", 3}, entry(3, {}, "1"));
    t.define({"arg", 3}, entry(3, {}, "1"));
    t.define({"=..", 2}, entry(2, {}, "1"));
    for (const char *test : {"var", "nonvar", "write", "print"})
        t.define({test, 1}, entry(1, {}, "1"));
    t.define({"nl", 0}, entry(0, {}, "1"));
    for (const char *test : {"atom", "atomic", "integer", "number"})
        t.define({test, 1}, entry(1, {LinConstraint::eq(x(1), 0)}, "x1"));
    t.define({"compound", 1}, entry(1, {LinConstraint::ge(x(1), 1)}, "1"));
    return t;
}

void BuiltinTable::define(const PredId &p, BuiltinEntry e) {
    auto names = argument_names(p.arity);
    if (e.num.dims() != names)
        throw TableError("numeric post of " + p.to_string() + " is not over its argument variables");
    for (const BoolFun *f : {&e.post, &e.pre})
        for (const auto &v : f->variables())
            if (!argument_index(v, p.arity))
                throw TableError("formula for " + p.to_string() + " mentions " + v);
    // 0 is allowed: it is the post of a predicate that never succeeds.
    if (!e.post.is_positive() && !e.post.is_false())
        throw TableError("boolean post of " + p.to_string() + " is not positive");
    entries_[p] = std::move(e);
}

const BuiltinEntry *BuiltinTable::find(const PredId &p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? nullptr : &it->second;
}

void BuiltinTable::load_text(const std::string &text) {
    OperatorTable ops = OperatorTable::standard();
    ops.add_infix("<->", 800, OpType::XFY);
    for (const auto &rt : read_terms(text, ops)) {
        const Term &t = rt.term;
        if (!t.is("builtin", 4))
            table_error(rt.line, "expected builtin(Name/Arity, num(...), bool(...), pre(...))");
        const Term &id = t.args[0];
        if (!id.is("/", 2) || id.args[0].kind != Term::Kind::Constant || id.args[1].kind != Term::Kind::Integer ||
            id.args[1].value < 0)
            table_error(rt.line, "expected Name/Arity, got " + id.to_string());
        PredId p{id.args[0].name, static_cast<std::size_t>(id.args[1].value)};
        if (!t.args[1].is("num", 1) || !t.args[2].is("bool", 1) || !t.args[3].is("pre", 1))
            table_error(rt.line, "expected num(...), bool(...), pre(...)");
        std::vector<LinConstraint> cs;
        const Term *list = &t.args[1].args[0];
        while (list->is(".", 2)) {
            cs.push_back(constraint(list->args[0], p.arity, rt.line));
            list = &list->args[1];
        }
        if (!(list->kind == Term::Kind::Constant && list->name == "[]"))
            table_error(rt.line, "num(...) expects a list of constraints");
        BuiltinEntry e{Polyhedron::from_constraints(argument_names(p.arity), cs),
                       formula(t.args[2].args[0], p.arity, rt.line), formula(t.args[3].args[0], p.arity, rt.line)};
        try {
            define(p, std::move(e));
        } catch (const TableError &err) {
            table_error(rt.line, err.what());
        }
    }
}

void BuiltinTable::load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    load_text(ss.str());
}

} // namespace terminfer
