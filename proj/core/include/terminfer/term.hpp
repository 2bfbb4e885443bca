#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace terminfer {

/// First-order term. Lists use the functor '.'/2 with '[]' as the empty list.
struct Term {
    enum class Kind { Variable, Constant, Integer, Compound };

    Kind kind = Kind::Constant;
    /// Variable name, constant or functor name; empty for integers.
    std::string name;
    std::int64_t value = 0;
    std::vector<Term> args;

    static Term variable(std::string name);
    static Term constant(std::string name);
    static Term integer(std::int64_t value);
    static Term compound(std::string functor, std::vector<Term> args);
    static Term list(std::vector<Term> items, Term tail = constant("[]"));

    bool is_variable() const { return kind == Kind::Variable; }
    bool is_callable() const { return kind == Kind::Constant || kind == Kind::Compound; }
    bool is(const std::string &functor, std::size_t arity) const {
        return is_callable() && name == functor && args.size() == arity;
    }

    /// Variables in first-occurrence order, without repeats.
    std::vector<std::string> variables() const;
    void collect_variables(std::vector<std::string> &out) const;

    /// Canonical text that reads back as the same term: operators are
    /// written in functional notation, lists in bracket notation.
    std::string to_string() const;

    auto operator<=>(const Term &) const = default;
    bool operator==(const Term &) const = default;
};

/// `name` quoted when it would not read back as the same atom.
std::string quote_atom(const std::string &name);

} // namespace terminfer
