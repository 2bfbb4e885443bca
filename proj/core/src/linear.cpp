#include "terminfer/linear.hpp"

#include <sstream>

namespace terminfer {

std::string to_string(const Rational &q) { return q.get_str(); }

LinExpr LinExpr::variable(const std::string &name, const Rational &coefficient) {
    LinExpr e;
    e.add_term(name, coefficient);
    return e;
}

Rational LinExpr::coefficient(const std::string &name) const {
    auto it = coefficients_.find(name);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

std::vector<std::string> LinExpr::variables() const {
    std::vector<std::string> out;
    out.reserve(coefficients_.size());
    for (const auto &[name, _] : coefficients_)
        out.push_back(name);
    return out;
}

void LinExpr::add_term(const std::string &name, const Rational &coefficient) {
    if (coefficient == 0)
        return;
    auto [it, inserted] = coefficients_.emplace(name, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            coefficients_.erase(it);
    }
}

LinExpr &LinExpr::operator+=(const LinExpr &other) {
    for (const auto &[name, c] : other.coefficients_)
        add_term(name, c);
    constant_ += other.constant_;
    return *this;
}

LinExpr &LinExpr::operator-=(const LinExpr &other) {
    for (const auto &[name, c] : other.coefficients_)
        add_term(name, -c);
    constant_ -= other.constant_;
    return *this;
}

LinExpr &LinExpr::operator*=(const Rational &factor) {
    if (factor == 0) {
        coefficients_.clear();
        constant_ = 0;
        return *this;
    }
    for (auto &[_, c] : coefficients_)
        c *= factor;
    constant_ *= factor;
    return *this;
}

LinExpr LinExpr::substitute(const std::map<std::string, LinExpr> &bindings) const {
    LinExpr out(constant_);
    for (const auto &[name, c] : coefficients_) {
        auto it = bindings.find(name);
        if (it == bindings.end())
            out.add_term(name, c);
        else
            out += it->second * c;
    }
    return out;
}

LinExpr LinExpr::rename(const std::map<std::string, std::string> &renaming) const {
    LinExpr out(constant_);
    for (const auto &[name, c] : coefficients_) {
        auto it = renaming.find(name);
        out.add_term(it == renaming.end() ? name : it->second, c);
    }
    return out;
}

Rational LinExpr::evaluate(const std::map<std::string, Rational> &point) const {
    Rational value = constant_;
    for (const auto &[name, c] : coefficients_) {
        auto it = point.find(name);
        if (it != point.end())
            value += c * it->second;
    }
    return value;
}

namespace {

void append_term(std::ostringstream &os, bool &first, const Rational &c, const std::string &name) {
    Rational mag = abs(c);
    if (first) {
        if (c < 0)
            os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (name.empty()) {
        os << mag.get_str();
    } else {
        if (mag != 1)
            os << mag.get_str() << "*";
        os << name;
    }
}

// Sum of the given terms with positive coefficients only.
std::string render_side(const std::vector<std::pair<std::string, Rational>> &terms, const Rational &k) {
    std::ostringstream os;
    bool first = true;
    for (const auto &[name, c] : terms)
        append_term(os, first, c, name);
    if (k != 0 || first)
        append_term(os, first, k, "");
    return os.str();
}

} // namespace

std::string LinExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[name, c] : coefficients_)
        append_term(os, first, c, name);
    if (constant_ != 0 || first)
        append_term(os, first, constant_, "");
    return os.str();
}

bool LinConstraint::satisfied_by(const std::map<std::string, Rational> &point) const {
    Rational v = expr.evaluate(point);
    switch (relation) {
    case Relation::Eq:
        return v == 0;
    case Relation::Le:
        return v <= 0;
    case Relation::Ge:
        return v >= 0;
    }
    return false;
}

std::string LinConstraint::to_string() const {
    std::vector<std::pair<std::string, Rational>> lhs, rhs;
    for (const auto &[name, c] : expr.coefficients()) {
        if (c > 0)
            lhs.emplace_back(name, c);
        else
            rhs.emplace_back(name, -c);
    }
    Rational lk = expr.constant() > 0 ? expr.constant() : Rational(0);
    Rational rk = expr.constant() < 0 ? Rational(-expr.constant()) : Rational(0);
    // Keep the variables on the left when only constants would be there.
    if (lhs.empty() && !rhs.empty()) {
        std::swap(lhs, rhs);
        std::swap(lk, rk);
        const char *op = relation == Relation::Eq ? " = " : relation == Relation::Le ? " >= " : " =< ";
        return render_side(lhs, lk) + op + render_side(rhs, rk);
    }
    const char *op = relation == Relation::Eq ? " = " : relation == Relation::Le ? " =< " : " >= ";
    return render_side(lhs, lk) + op + render_side(rhs, rk);
}

} // namespace terminfer
