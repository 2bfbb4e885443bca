#include "oracles.hpp"

namespace terminfer::testing {

std::vector<LinConstraint> fm_eliminate(std::vector<LinConstraint> system,
                                        const std::vector<std::string> &vars) {
    // Equalities become two inequalities; everything is `e >= 0` afterwards.
    std::vector<LinExpr> ineqs;
    for (const auto &c : system) {
        switch (c.relation) {
        case Relation::Ge:
            ineqs.push_back(c.expr);
            break;
        case Relation::Le:
            ineqs.push_back(-c.expr);
            break;
        case Relation::Eq:
            ineqs.push_back(c.expr);
            ineqs.push_back(-c.expr);
            break;
        }
    }
    for (const auto &v : vars) {
        std::vector<LinExpr> lower{LinExpr::variable(v)}, upper, rest;
        for (auto &e : ineqs) {
            Rational c = e.coefficient(v);
            if (c > 0)
                lower.push_back(e);
            else if (c < 0)
                upper.push_back(e);
            else
                rest.push_back(e);
        }
        for (const auto &lo : lower)
            for (const auto &up : upper)
                rest.push_back(lo * Rational(-up.coefficient(v)) + up * lo.coefficient(v));
        ineqs = std::move(rest);
    }
    std::vector<LinConstraint> out;
    for (auto &e : ineqs)
        out.push_back({e, Relation::Ge});
    return out;
}

std::optional<Interval> feasible_interval(const std::vector<LinConstraint> &system,
                                          const std::string &var,
                                          const std::map<std::string, Rational> &point) {
    Interval iv{0, std::nullopt};
    auto meet_lo = [&](const Rational &v) {
        if (v > iv.lo)
            iv.lo = v;
    };
    auto meet_hi = [&](const Rational &v) {
        if (!iv.hi || v < *iv.hi)
            iv.hi = v;
    };
    for (const auto &c : system) {
        Rational a = c.expr.coefficient(var);
        LinExpr rest = c.expr - LinExpr::variable(var, a);
        Rational r = rest.evaluate(point);
        // a*var + r (rel) 0
        if (a == 0) {
            bool ok = c.relation == Relation::Eq ? r == 0 : c.relation == Relation::Ge ? r >= 0 : r <= 0;
            if (!ok)
                return std::nullopt;
            continue;
        }
        Rational bound = -r / a;
        Relation rel = c.relation;
        if (a < 0 && rel != Relation::Eq)
            rel = rel == Relation::Ge ? Relation::Le : Relation::Ge;
        if (rel == Relation::Eq) {
            meet_lo(bound);
            meet_hi(bound);
        } else if (rel == Relation::Ge) {
            meet_lo(bound);
        } else {
            meet_hi(bound);
        }
    }
    if (iv.hi && *iv.hi < iv.lo)
        return std::nullopt;
    return iv;
}

TruthTable table_of(int n, const std::function<bool(const std::vector<bool> &)> &f) {
    TruthTable t(std::size_t{1} << n);
    std::vector<bool> in(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        for (int i = 0; i < n; ++i)
            in[static_cast<std::size_t>(i)] = (idx >> i) & 1;
        t[idx] = f(in);
    }
    return t;
}

} // namespace terminfer::testing
