#include "terminfer/polyhedron.hpp"

#include "terminfer/error.hpp"
#include "terminfer/fuel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace terminfer {

namespace {

bool all_zero(const std::vector<Rational> &a) {
    return std::all_of(a.begin(), a.end(), [](const Rational &v) { return v == 0; });
}

// Scales to coprime integers; equalities get a positive leading coefficient.
void normalize(DenseRow &r) {
    mpz_class l = 1;
    for (const auto &v : r.a)
        if (v != 0)
            l = lcm(l, v.get_den());
    if (r.k != 0)
        l = lcm(l, r.k.get_den());
    mpz_class g = 0;
    for (auto &v : r.a) {
        v *= l;
        g = gcd(g, v.get_num());
    }
    r.k *= l;
    g = gcd(g, r.k.get_num());
    if (g > 1) {
        Rational inv(1, g);
        for (auto &v : r.a)
            v *= inv;
        r.k *= inv;
    }
    if (r.equality) {
        const Rational *lead = nullptr;
        for (const auto &v : r.a)
            if (v != 0) {
                lead = &v;
                break;
            }
        if (lead == nullptr)
            lead = &r.k;
        if (*lead < 0) {
            for (auto &v : r.a)
                v = -v;
            r.k = -r.k;
        }
    }
}

bool row_less(const DenseRow &x, const DenseRow &y) {
    if (x.equality != y.equality)
        return x.equality;
    for (std::size_t j = 0; j < x.a.size(); ++j)
        if (x.a[j] != y.a[j])
            return x.a[j] < y.a[j];
    return x.k < y.k;
}

Rational row_value(const DenseRow &r, const std::vector<Rational> &x) {
    Rational v = r.k;
    for (std::size_t j = 0; j < r.a.size(); ++j)
        if (r.a[j] != 0)
            v += r.a[j] * x[j];
    return v;
}

// r -= f * s
void subtract_scaled(DenseRow &r, const Rational &f, const DenseRow &s) {
    for (std::size_t j = 0; j < r.a.size(); ++j)
        if (s.a[j] != 0)
            r.a[j] -= f * s.a[j];
    r.k -= f * s.k;
}

struct Canonical {
    std::vector<DenseRow> rows;
    bool empty = false;
};

Canonical canonicalize(std::size_t n, std::vector<DenseRow> input) {
    std::vector<DenseRow> rows;
    rows.reserve(input.size());
    for (auto &r : input) {
        r.a.resize(n);
        normalize(r);
        if (all_zero(r.a)) {
            if (r.equality ? r.k != 0 : r.k < 0)
                return {{}, true};
            continue;
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        return {};

    LpResult feasible = lp_feasible(rows, n);
    if (feasible.status == LpStatus::Infeasible)
        return {{}, true};

    // Implicit equalities: an inequality (or a non-negativity bound) whose
    // maximum slack over the polyhedron is zero. Points found along the way
    // certify strictness for other rows.
    std::vector<bool> strict(rows.size(), false);
    std::vector<bool> positive_dim(n, false);
    auto absorb = [&](const std::vector<Rational> &pt) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].equality && !strict[i] && row_value(rows[i], pt) > 0)
                strict[i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (pt[j] > 0)
                positive_dim[j] = true;
    };
    absorb(feasible.point);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].equality || strict[i])
            continue;
        std::vector<Rational> objective(n);
        for (std::size_t j = 0; j < n; ++j)
            objective[j] = -rows[i].a[j];
        LpResult res = lp_minimize(rows, objective, n);
        if (res.status == LpStatus::Unbounded) {
            strict[i] = true;
        } else if (-res.value + rows[i].k > 0) {
            strict[i] = true;
            absorb(res.point);
        } else {
            rows[i].equality = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (positive_dim[j])
            continue;
        std::vector<Rational> objective(n);
        objective[j] = -1;
        LpResult res = lp_minimize(rows, objective, n);
        if (res.status == LpStatus::Unbounded || -res.value > 0) {
            positive_dim[j] = true;
            if (res.status == LpStatus::Optimal)
                absorb(res.point);
        } else {
            DenseRow fixed;
            fixed.a.assign(n, 0);
            fixed.a[j] = 1;
            fixed.equality = true;
            rows.push_back(std::move(fixed));
        }
    }

    std::vector<DenseRow> eqs, ges;
    for (auto &r : rows)
        (r.equality ? eqs : ges).push_back(std::move(r));

    // Reduced row-echelon form of the affine hull.
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < eqs.size(); ++col) {
        std::size_t sel = rank;
        while (sel < eqs.size() && eqs[sel].a[col] == 0)
            ++sel;
        if (sel == eqs.size())
            continue;
        std::swap(eqs[rank], eqs[sel]);
        Rational p = eqs[rank].a[col];
        for (auto &v : eqs[rank].a)
            v /= p;
        eqs[rank].k /= p;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (i != rank && eqs[i].a[col] != 0)
                subtract_scaled(eqs[i], Rational(eqs[i].a[col]), eqs[rank]);
        pivots.push_back(col);
        ++rank;
    }
    eqs.resize(rank);

    for (auto &g : ges) {
        for (std::size_t t = 0; t < rank; ++t)
            if (g.a[pivots[t]] != 0)
                subtract_scaled(g, Rational(g.a[pivots[t]]), eqs[t]);
        normalize(g);
    }
    for (auto &e : eqs)
        normalize(e);
    std::erase_if(ges, [](const DenseRow &g) {
        return std::all_of(g.a.begin(), g.a.end(), [](const Rational &v) { return v >= 0; }) && g.k >= 0;
    });
    std::sort(ges.begin(), ges.end(), row_less);
    ges.erase(std::unique(ges.begin(), ges.end()), ges.end());

    std::vector<bool> removed(ges.size(), false);
    for (std::size_t i = 0; i < ges.size(); ++i) {
        std::vector<DenseRow> others(eqs);
        for (std::size_t j = 0; j < ges.size(); ++j)
            if (j != i && !removed[j])
                others.push_back(ges[j]);
        LpResult res = lp_minimize(others, ges[i].a, n);
        if (res.status == LpStatus::Optimal && res.value + ges[i].k >= 0)
            removed[i] = true;
    }

    Canonical out;
    out.rows = std::move(eqs);
    for (std::size_t i = 0; i < ges.size(); ++i)
        if (!removed[i])
            out.rows.push_back(std::move(ges[i]));
    return out;
}

void erase_column(std::vector<DenseRow> &rows, std::size_t col) {
    for (auto &r : rows)
        r.a.erase(r.a.begin() + static_cast<std::ptrdiff_t>(col));
}

// Eliminates column v from a canonical system (v stays as a zero column).
std::vector<DenseRow> eliminate(std::vector<DenseRow> rows, std::size_t v, std::size_t n) {
    auto eq_it = std::find_if(rows.begin(), rows.end(),
                              [&](const DenseRow &r) { return r.equality && r.a[v] != 0; });
    if (eq_it != rows.end()) {
        DenseRow e = *eq_it;
        rows.erase(eq_it);
        for (auto &r : rows)
            if (r.a[v] != 0)
                subtract_scaled(r, r.a[v] / e.a[v], e);
        // v >= 0 becomes -(e - a_v v) / a_v >= 0.
        DenseRow bound = e;
        Rational f = -1 / Rational(e.a[v]);
        for (auto &x : bound.a)
            x *= f;
        bound.k *= f;
        bound.a[v] = 0;
        bound.equality = false;
        rows.push_back(std::move(bound));
        return rows;
    }
    std::vector<DenseRow> lower, upper, out;
    DenseRow unit;
    unit.a.assign(n, 0);
    unit.a[v] = 1;
    lower.push_back(std::move(unit));
    for (auto &r : rows) {
        if (r.a[v] > 0)
            lower.push_back(std::move(r));
        else if (r.a[v] < 0)
            upper.push_back(std::move(r));
        else
            out.push_back(std::move(r));
    }
    charge_fuel(static_cast<std::int64_t>(lower.size() * upper.size()));
    for (const auto &lo : lower) {
        for (const auto &up : upper) {
            DenseRow c;
            c.a.resize(n);
            Rational fl = -up.a[v], fu = lo.a[v];
            for (std::size_t j = 0; j < n; ++j)
                c.a[j] = fl * lo.a[j] + fu * up.a[j];
            c.k = fl * lo.k + fu * up.k;
            c.a[v] = 0;
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace

Polyhedron::Polyhedron(std::vector<std::string> dims, std::vector<DenseRow> rows)
    : dims_(std::move(dims)) {
    std::set<std::string> seen(dims_.begin(), dims_.end());
    if (seen.size() != dims_.size())
        throw DimensionMismatch("duplicate dimension name");
    Canonical c = canonicalize(dims_.size(), std::move(rows));
    rows_ = std::move(c.rows);
    empty_ = c.empty;
}

Polyhedron Polyhedron::universe(std::vector<std::string> dims) { return Polyhedron(std::move(dims), {}); }

Polyhedron Polyhedron::empty(std::vector<std::string> dims) {
    Polyhedron p(std::move(dims), {});
    p.empty_ = true;
    return p;
}

Polyhedron Polyhedron::from_constraints(std::vector<std::string> dims,
                                        std::span<const LinConstraint> constraints) {
    return universe(std::move(dims)).add_constraints(constraints);
}

std::size_t Polyhedron::index_of(const std::string &name) const {
    auto it = std::find(dims_.begin(), dims_.end(), name);
    if (it == dims_.end())
        throw DimensionMismatch("unknown dimension '" + name + "'");
    return static_cast<std::size_t>(it - dims_.begin());
}

DenseRow Polyhedron::to_row(const LinConstraint &c) const {
    DenseRow r;
    r.a.assign(dims_.size(), 0);
    LinExpr e = c.relation == Relation::Le ? -c.expr : c.expr;
    for (const auto &[name, coef] : e.coefficients())
        r.a[index_of(name)] = coef;
    r.k = e.constant();
    r.equality = c.relation == Relation::Eq;
    return r;
}

LinConstraint Polyhedron::to_constraint(const DenseRow &r) const {
    LinExpr e(r.k);
    for (std::size_t j = 0; j < dims_.size(); ++j)
        if (r.a[j] != 0)
            e += LinExpr::variable(dims_[j], r.a[j]);
    return {e, r.equality ? Relation::Eq : Relation::Ge};
}

std::vector<LinConstraint> Polyhedron::constraints() const {
    if (empty_)
        return {LinConstraint{LinExpr(-1), Relation::Ge}};
    std::vector<LinConstraint> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_)
        out.push_back(to_constraint(r));
    return out;
}

std::size_t Polyhedron::inequality_count() const {
    std::size_t n = 0;
    for (const auto &r : rows_)
        n += r.equality ? 2 : 1;
    return n;
}

int Polyhedron::affine_dimension() const {
    if (empty_)
        return -1;
    int eqs = 0;
    for (const auto &r : rows_)
        if (r.equality)
            ++eqs;
    return static_cast<int>(dims_.size()) - eqs;
}

Polyhedron Polyhedron::meet(const Polyhedron &other) const {
    if (dims_ != other.dims_)
        throw DimensionMismatch("meet over different dimension lists");
    if (empty_ || other.empty_)
        return empty(dims_);
    std::vector<DenseRow> rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return Polyhedron(dims_, std::move(rows));
}

Polyhedron Polyhedron::add_constraints(std::span<const LinConstraint> constraints) const {
    if (empty_)
        return *this;
    std::vector<DenseRow> rows = rows_;
    for (const auto &c : constraints)
        rows.push_back(to_row(c));
    return Polyhedron(dims_, std::move(rows));
}

Polyhedron Polyhedron::project(const std::vector<std::string> &keep) const {
    std::set<std::string> kept(keep.begin(), keep.end());
    for (const auto &k : kept)
        index_of(k);
    std::vector<std::string> dims;
    for (const auto &d : dims_)
        if (kept.count(d))
            dims.push_back(d);
    if (empty_)
        return empty(std::move(dims));

    std::vector<std::string> cur_dims = dims_;
    std::vector<DenseRow> rows = rows_;
    for (;;) {
        std::size_t n = cur_dims.size();
        std::optional<std::size_t> choice;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (kept.count(cur_dims[v]))
                continue;
            std::size_t pos = 1, neg = 0;
            bool in_eq = false;
            for (const auto &r : rows) {
                if (r.a[v] == 0)
                    continue;
                if (r.equality)
                    in_eq = true;
                else if (r.a[v] > 0)
                    ++pos;
                else
                    ++neg;
            }
            std::size_t cost = in_eq ? 0 : pos * neg + 1;
            if (!choice || cost < best_cost) {
                choice = v;
                best_cost = cost;
            }
        }
        if (!choice)
            break;
        rows = eliminate(std::move(rows), *choice, n);
        erase_column(rows, *choice);
        cur_dims.erase(cur_dims.begin() + static_cast<std::ptrdiff_t>(*choice));
        Canonical c = canonicalize(cur_dims.size(), std::move(rows));
        if (c.empty)
            return empty(std::move(dims));
        rows = std::move(c.rows);
    }
    return Polyhedron(std::move(cur_dims), std::move(rows));
}

Polyhedron Polyhedron::hull(const Polyhedron &other) const {
    if (dims_ != other.dims_)
        throw DimensionMismatch("hull over different dimension lists");
    if (empty_)
        return other;
    if (other.empty_)
        return *this;
    if (is_universe() || other.is_universe())
        return universe(dims_);

    // Lifted system over (x, z, s): x = y + z with y in s*this and z in
    // (1 - s)*other, 0 <= s <= 1; then project onto x.
    const std::size_t n = dims_.size();
    const std::size_t width = 2 * n + 1;
    const std::size_t s = 2 * n;
    std::vector<std::string> lifted = dims_;
    for (std::size_t j = 0; j < n; ++j)
        lifted.push_back("\x01z" + std::to_string(j));
    lifted.push_back("\x01s");

    std::vector<DenseRow> rows;
    for (const auto &r : rows_) {
        DenseRow l;
        l.a.assign(width, 0);
        for (std::size_t j = 0; j < n; ++j) {
            l.a[j] = r.a[j];
            l.a[n + j] = -r.a[j];
        }
        l.a[s] = r.k;
        l.equality = r.equality;
        rows.push_back(std::move(l));
    }
    for (std::size_t j = 0; j < n; ++j) {
        DenseRow y;
        y.a.assign(width, 0);
        y.a[j] = 1;
        y.a[n + j] = -1;
        rows.push_back(std::move(y));
    }
    for (const auto &r : other.rows_) {
        DenseRow l;
        l.a.assign(width, 0);
        for (std::size_t j = 0; j < n; ++j)
            l.a[n + j] = r.a[j];
        l.a[s] = -r.k;
        l.k = r.k;
        l.equality = r.equality;
        rows.push_back(std::move(l));
    }
    DenseRow bound;
    bound.a.assign(width, 0);
    bound.a[s] = -1;
    bound.k = 1;
    rows.push_back(std::move(bound));
    return Polyhedron(std::move(lifted), std::move(rows)).project(dims_);
}

namespace {

std::vector<DenseRow> split_inequalities(const std::vector<DenseRow> &rows) {
    std::vector<DenseRow> out;
    for (const auto &r : rows) {
        DenseRow g = r;
        g.equality = false;
        out.push_back(g);
        if (r.equality) {
            for (auto &v : g.a)
                v = -v;
            g.k = -g.k;
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool rows_entail(std::span<const DenseRow> rows, const DenseRow &c, std::size_t n) {
    LpResult res = lp_minimize(rows, c.a, n);
    if (res.status == LpStatus::Infeasible)
        return true;
    return res.status == LpStatus::Optimal && res.value + c.k >= 0;
}

} // namespace

Polyhedron Polyhedron::widen(const Polyhedron &next) const {
    if (dims_ != next.dims_)
        throw DimensionMismatch("widening over different dimension lists");
    if (empty_)
        return next;
    if (next.empty_)
        return *this;
    const std::size_t n = dims_.size();
    std::vector<DenseRow> prev_rows = split_inequalities(rows_);
    std::vector<DenseRow> next_rows = split_inequalities(next.rows_);
    std::vector<DenseRow> kept;
    for (const auto &c : prev_rows)
        if (next.entails(to_constraint(c)))
            kept.push_back(c);
    for (const auto &c : next_rows) {
        if (!entails(to_constraint(c)))
            continue;
        for (std::size_t i = 0; i < prev_rows.size(); ++i) {
            // Rows implied by non-negativity alone can be swapped for anything.
            if (rows_entail({}, prev_rows[i], n))
                continue;
            std::vector<DenseRow> swapped;
            for (std::size_t j = 0; j < prev_rows.size(); ++j)
                if (j != i)
                    swapped.push_back(prev_rows[j]);
            swapped.push_back(c);
            if (rows_entail(swapped, prev_rows[i], n)) {
                kept.push_back(c);
                break;
            }
        }
    }
    return Polyhedron(dims_, std::move(kept));
}

bool Polyhedron::entails(const LinConstraint &c) const {
    if (empty_)
        return true;
    DenseRow r = to_row(c);
    if (r.equality) {
        DenseRow neg = r;
        for (auto &v : neg.a)
            v = -v;
        neg.k = -neg.k;
        r.equality = neg.equality = false;
        return rows_entail(rows_, r, dims_.size()) && rows_entail(rows_, neg, dims_.size());
    }
    return rows_entail(rows_, r, dims_.size());
}

bool Polyhedron::entails(const Polyhedron &other) const {
    if (dims_ != other.dims_)
        throw DimensionMismatch("inclusion test over different dimension lists");
    if (empty_)
        return true;
    if (other.empty_)
        return false;
    for (const auto &r : other.rows_)
        if (!entails(other.to_constraint(r)))
            return false;
    return true;
}

Polyhedron Polyhedron::rename(const std::map<std::string, std::string> &renaming) const {
    Polyhedron p = *this;
    for (auto &d : p.dims_) {
        auto it = renaming.find(d);
        if (it != renaming.end())
            d = it->second;
    }
    std::set<std::string> seen(p.dims_.begin(), p.dims_.end());
    if (seen.size() != p.dims_.size())
        throw DimensionMismatch("renaming is not injective");
    return p;
}

Polyhedron Polyhedron::extend(const std::vector<std::string> &extra_dims) const {
    std::vector<std::string> dims = dims_;
    dims.insert(dims.end(), extra_dims.begin(), extra_dims.end());
    if (empty_)
        return empty(std::move(dims));
    std::vector<DenseRow> rows = rows_;
    for (auto &r : rows)
        r.a.resize(dims.size());
    return Polyhedron(std::move(dims), std::move(rows));
}

std::optional<Rational> Polyhedron::minimum(const LinExpr &e) const {
    if (empty_)
        return std::nullopt;
    std::vector<Rational> objective(dims_.size());
    for (const auto &[name, c] : e.coefficients())
        objective[index_of(name)] = c;
    LpResult res = lp_minimize(rows_, objective, dims_.size());
    if (res.status != LpStatus::Optimal)
        return std::nullopt;
    return res.value + e.constant();
}

std::optional<std::map<std::string, Rational>> Polyhedron::minimizer(const LinExpr &e) const {
    if (empty_)
        return std::nullopt;
    std::vector<Rational> objective(dims_.size());
    for (const auto &[name, c] : e.coefficients())
        objective[index_of(name)] = c;
    LpResult res = lp_minimize(rows_, objective, dims_.size());
    if (res.status != LpStatus::Optimal)
        return std::nullopt;
    std::map<std::string, Rational> pt;
    for (std::size_t j = 0; j < dims_.size(); ++j)
        pt[dims_[j]] = res.point[j];
    return pt;
}

std::optional<Rational> Polyhedron::maximum(const LinExpr &e) const {
    auto m = minimum(-e);
    if (!m)
        return std::nullopt;
    return Rational(-*m);
}

std::optional<std::map<std::string, Rational>> Polyhedron::sample() const {
    if (empty_)
        return std::nullopt;
    LpResult res = lp_feasible(rows_, dims_.size());
    std::map<std::string, Rational> pt;
    for (std::size_t j = 0; j < dims_.size(); ++j)
        pt[dims_[j]] = res.point.empty() ? Rational(0) : res.point[j];
    return pt;
}

bool Polyhedron::contains(const std::map<std::string, Rational> &point) const {
    if (empty_)
        return false;
    std::vector<Rational> x(dims_.size());
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        auto it = point.find(dims_[j]);
        x[j] = it == point.end() ? Rational(0) : it->second;
        if (x[j] < 0)
            return false;
    }
    for (const auto &r : rows_) {
        Rational v = row_value(r, x);
        if (r.equality ? v != 0 : v < 0)
            return false;
    }
    return true;
}

std::string Polyhedron::to_string() const {
    if (empty_)
        return "false";
    if (rows_.empty())
        return "true";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            os << ", ";
        os << to_constraint(rows_[i]).to_string();
    }
    os << "}";
    return os.str();
}

} // namespace terminfer
