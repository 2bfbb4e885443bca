#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace terminfer {

using Rational = mpq_class;

std::string to_string(const Rational &q);

/// Affine expression over named variables with exact rational coefficients.
/// Zero coefficients are never stored.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(long constant) : constant_(constant) {}
    LinExpr(Rational constant) : constant_(std::move(constant)) {}

    static LinExpr variable(const std::string &name, const Rational &coefficient = 1);

    const std::map<std::string, Rational> &coefficients() const { return coefficients_; }
    const Rational &constant() const { return constant_; }
    Rational coefficient(const std::string &name) const;
    bool is_constant() const { return coefficients_.empty(); }
    std::vector<std::string> variables() const;

    LinExpr &operator+=(const LinExpr &other);
    LinExpr &operator-=(const LinExpr &other);
    LinExpr &operator*=(const Rational &factor);

    friend LinExpr operator+(LinExpr a, const LinExpr &b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr &b) { return a -= b; }
    friend LinExpr operator*(LinExpr a, const Rational &k) { return a *= k; }
    friend LinExpr operator*(const Rational &k, LinExpr a) { return a *= k; }
    friend LinExpr operator-(LinExpr a) { return a *= -1; }

    /// Simultaneous substitution; variables without a binding are kept.
    LinExpr substitute(const std::map<std::string, LinExpr> &bindings) const;
    LinExpr rename(const std::map<std::string, std::string> &renaming) const;
    Rational evaluate(const std::map<std::string, Rational> &point) const;

    bool operator==(const LinExpr &other) const {
        return constant_ == other.constant_ && coefficients_ == other.coefficients_;
    }

    /// Renders as `2*x1 + x2 + 1`.
    std::string to_string() const;

private:
    void add_term(const std::string &name, const Rational &coefficient);

    std::map<std::string, Rational> coefficients_;
    Rational constant_ = 0;
};

enum class Relation { Eq, Le, Ge };

/// `expr rel 0`.
struct LinConstraint {
    LinExpr expr;
    Relation relation = Relation::Ge;

    static LinConstraint eq(const LinExpr &lhs, const LinExpr &rhs) { return {lhs - rhs, Relation::Eq}; }
    static LinConstraint le(const LinExpr &lhs, const LinExpr &rhs) { return {lhs - rhs, Relation::Le}; }
    static LinConstraint ge(const LinExpr &lhs, const LinExpr &rhs) { return {lhs - rhs, Relation::Ge}; }

    bool satisfied_by(const std::map<std::string, Rational> &point) const;

    /// Renders with positive terms on the left, e.g. `x1 + x2 = x3`,
    /// `x1 >= x2 + 1`.
    std::string to_string() const;

    bool operator==(const LinConstraint &other) const = default;
};

} // namespace terminfer
