#include "terminfer/term.hpp"

#include <algorithm>
#include <cctype>

namespace terminfer {

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(name);
    return t;
}

Term Term::constant(std::string name) {
    Term t;
    t.name = std::move(name);
    return t;
}

Term Term::integer(std::int64_t value) {
    Term t;
    t.kind = Kind::Integer;
    t.value = value;
    return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    if (args.empty())
        return constant(std::move(functor));
    Term t;
    t.kind = Kind::Compound;
    t.name = std::move(functor);
    t.args = std::move(args);
    return t;
}

Term Term::list(std::vector<Term> items, Term tail) {
    for (auto it = items.rbegin(); it != items.rend(); ++it)
        tail = compound(".", {std::move(*it), std::move(tail)});
    return tail;
}

void Term::collect_variables(std::vector<std::string> &out) const {
    if (kind == Kind::Variable) {
        if (std::find(out.begin(), out.end(), name) == out.end())
            out.push_back(name);
        return;
    }
    for (const auto &a : args)
        a.collect_variables(out);
}

std::vector<std::string> Term::variables() const {
    std::vector<std::string> out;
    collect_variables(out);
    return out;
}

namespace {

bool is_symbol_char(char c) { return std::string_view("#$&*+-./:<=>?@^~\\").find(c) != std::string_view::npos; }

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::string quote_atom(const std::string &name) {
    if (name == "[]" || name == "!" || name == ";" || name == "{}")
        return name;
    if (!name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
        std::all_of(name.begin(), name.end(), is_alnum))
        return name;
    if (!name.empty() && std::all_of(name.begin(), name.end(), is_symbol_char) && name != ".")
        return name;
    std::string out = "'";
    for (char c : name) {
        if (c == '\'' || c == '\\')
            out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "'";
}

std::string Term::to_string() const {
    switch (kind) {
    case Kind::Variable:
        return name;
    case Kind::Integer:
        return std::to_string(value);
    case Kind::Constant:
        return quote_atom(name);
    case Kind::Compound:
        break;
    }
    if (is(".", 2)) {
        std::string s = "[" + args[0].to_string();
        const Term *t = &args[1];
        while (t->is(".", 2)) {
            s += "," + t->args[0].to_string();
            t = &t->args[1];
        }
        if (!(t->kind == Kind::Constant && t->name == "[]"))
            s += "|" + t->to_string();
        return s + "]";
    }
    if (is("{}", 1))
        return "{" + args[0].to_string() + "}";
    std::string f = quote_atom(name);
    if (name == "[]")
        f = "'[]'";
    std::string s = f + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            s += ",";
        std::string a = args[i].to_string();
        // A bare operator atom as argument must be bracketed to read back.
        if (args[i].kind == Kind::Constant && !a.empty() && is_symbol_char(a[0]))
            a = "(" + a + ")";
        s += a;
    }
    return s + ")";
}

} // namespace terminfer
