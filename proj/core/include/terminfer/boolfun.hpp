#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace terminfer {

/// Orders `x2` before `x10`: digit runs compare numerically.
bool natural_less(const std::string &a, const std::string &b);

/// Boolean function over named variables, stored as a truth table over its
/// essential support. Variables are kept in natural order and a variable the
/// function does not depend on is dropped, so two values are equal iff they
/// denote the same function.
///
/// Supports of more than kMaxVariables variables throw BudgetExceeded.
class BoolFun {
public:
    static constexpr std::size_t kMaxVariables = 24;

    /// The constant 0.
    BoolFun() = default;

    static BoolFun constant(bool value);
    static BoolFun variable(const std::string &name);
    /// `table[i]` is the value at the assignment whose bit j is the value of
    /// `vars[j]`.
    static BoolFun from_table(std::vector<std::string> vars, const std::vector<bool> &table);

    /// Essential support in natural order.
    const std::vector<std::string> &variables() const { return vars_; }
    bool depends_on(const std::string &var) const;

    bool is_true() const { return vars_.empty() && value_at(0); }
    bool is_false() const { return vars_.empty() && !value_at(0); }
    /// f(1,...,1) = 1.
    bool is_positive() const;
    /// Antitone in no variable.
    bool is_monotone() const;

    /// Variables absent from `assignment` read as 0.
    bool evaluate(const std::map<std::string, bool> &assignment) const;

    BoolFun operator!() const;
    friend BoolFun conj(const BoolFun &a, const BoolFun &b);
    friend BoolFun disj(const BoolFun &a, const BoolFun &b);
    friend BoolFun iff(const BoolFun &a, const BoolFun &b);
    friend BoolFun implies(const BoolFun &a, const BoolFun &b);

    BoolFun restrict(const std::string &var, bool value) const;
    BoolFun forall(const std::set<std::string> &vars) const;
    BoolFun exists(const std::set<std::string> &vars) const;
    /// Simultaneous substitution of functions for variables.
    BoolFun compose(const std::map<std::string, BoolFun> &substitution) const;
    /// Renaming; the image of the support must be injective.
    BoolFun rename(const std::map<std::string, std::string> &renaming) const;

    /// Every model of this is a model of `other`.
    bool entails(const BoolFun &other) const;
    bool equivalent(const BoolFun &other) const { return *this == other; }

    /// Satisfying assignments that are minimal under the pointwise order,
    /// each given as its set of true variables. Sorted by size, then by
    /// natural order of the members.
    std::vector<std::vector<std::string>> minimal_models() const;

    /// Formula text: `*` and, `+` or, `<->` iff, `1`, `0`. Monotone
    /// functions print as the disjunction of their prime implicants.
    std::string to_string() const;

    bool operator==(const BoolFun &other) const = default;

private:
    BoolFun(std::vector<std::string> vars, std::vector<std::uint64_t> words);

    bool value_at(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1; }
    std::uint64_t size() const { return std::uint64_t{1} << vars_.size(); }

    /// Drops inessential variables and clears padding bits.
    void reduce();
    /// Table of this function over `vars`, a superset of the support.
    std::vector<std::uint64_t> expand(const std::vector<std::string> &vars) const;

    template <class Op>
    friend BoolFun combine(const BoolFun &a, const BoolFun &b, Op op);

    std::vector<std::string> vars_;
    std::vector<std::uint64_t> words_{0};
};

BoolFun conj(const BoolFun &a, const BoolFun &b);
BoolFun disj(const BoolFun &a, const BoolFun &b);
BoolFun iff(const BoolFun &a, const BoolFun &b);
BoolFun implies(const BoolFun &a, const BoolFun &b);

/// Parses the formula text produced by BoolFun::to_string. Precedence from
/// loosest: `<->` (right associative), `+`, `*`. Throws SyntaxError.
BoolFun parse_formula(const std::string &text);

} // namespace terminfer
