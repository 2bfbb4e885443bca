#include "terminfer/lp.hpp"

#include "terminfer/fuel.hpp"

#include <cassert>
#include <optional>

namespace terminfer {

namespace {

// Columns: structural variables, one surplus per inequality, one artificial
// per row, then the right-hand side.
class Tableau {
public:
    Tableau(std::span<const DenseRow> rows, std::size_t num_vars) : n_(num_vars) {
        std::size_t surplus = 0;
        for (const auto &r : rows)
            if (!r.equality)
                ++surplus;
        s_ = surplus;
        m_ = rows.size();
        cols_ = n_ + s_ + m_;
        t_.assign(m_, std::vector<Rational>(cols_ + 1));
        basis_.resize(m_);
        std::size_t next_surplus = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto &r = rows[i];
            auto &row = t_[i];
            for (std::size_t j = 0; j < n_ && j < r.a.size(); ++j)
                row[j] = r.a[j];
            if (!r.equality)
                row[next_surplus++] = -1;
            row[cols_] = -r.k;
            if (row[cols_] < 0)
                for (auto &v : row)
                    v = -v;
            row[n_ + s_ + i] = 1;
            basis_[i] = n_ + s_ + i;
        }
    }

    bool is_artificial(std::size_t j) const { return j >= n_ + s_ && j < cols_; }

    // Minimizes cost over columns; artificial columns may enter only when
    // allow_artificial is set.
    LpStatus optimize(const std::vector<Rational> &cost, bool allow_artificial) {
        std::vector<Rational> reduced(cols_ + 1);
        for (;;) {
            for (std::size_t j = 0; j <= cols_; ++j) {
                Rational z = j < cols_ ? cost[j] : Rational(0);
                for (std::size_t i = 0; i < m_; ++i)
                    if (cost[basis_[i]] != 0 && t_[i][j] != 0)
                        z -= cost[basis_[i]] * t_[i][j];
                reduced[j] = z;
            }
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && is_artificial(j))
                    continue;
                if (reduced[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter)
                return LpStatus::Optimal;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational &coef = t_[i][*enter];
                if (coef <= 0)
                    continue;
                Rational ratio = t_[i][cols_] / coef;
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                return LpStatus::Unbounded;
            pivot(*leave, *enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        charge_fuel(1);
        auto &prow = t_[r];
        Rational p = prow[c];
        for (auto &v : prow)
            if (v != 0)
                v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            Rational f = t_[i][c];
            auto &row = t_[i];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j] != 0)
                    row[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    // After phase one: pivots artificials out of the basis or drops their
    // rows when they are linearly dependent.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_;) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < n_ + s_; ++j)
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            }
        }
    }

    Rational objective(const std::vector<Rational> &cost) const {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i)
            v += cost[basis_[i]] * t_[i][cols_];
        return v;
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                x[basis_[i]] = t_[i][cols_];
        return x;
    }

    std::size_t columns() const { return cols_; }
    std::size_t structural() const { return n_; }

private:
    std::size_t n_, s_ = 0, m_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpResult lp_minimize(std::span<const DenseRow> rows, std::span<const Rational> objective,
                     std::size_t num_vars) {
    charge_fuel(1);
    Tableau tab(rows, num_vars);
    std::vector<Rational> phase1(tab.columns());
    for (std::size_t j = 0; j < tab.columns(); ++j)
        if (tab.is_artificial(j))
            phase1[j] = 1;
    tab.optimize(phase1, true);
    LpResult result;
    if (tab.objective(phase1) != 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    tab.drive_out_artificials();
    std::vector<Rational> phase2(tab.columns());
    for (std::size_t j = 0; j < num_vars && j < objective.size(); ++j)
        phase2[j] = objective[j];
    result.status = tab.optimize(phase2, false);
    if (result.status == LpStatus::Optimal) {
        result.value = tab.objective(phase2);
        result.point = tab.point();
    }
    return result;
}

LpResult lp_feasible(std::span<const DenseRow> rows, std::size_t num_vars) {
    std::vector<Rational> zero(num_vars);
    return lp_minimize(rows, zero, num_vars);
}

} // namespace terminfer
