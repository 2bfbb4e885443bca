#pragma once

#include "terminfer/linear.hpp"

#include <span>
#include <vector>

namespace terminfer {

/// Dense constraint `a . x + k = 0` or `a . x + k >= 0`.
struct DenseRow {
    std::vector<Rational> a;
    Rational k;
    bool equality = false;

    bool operator==(const DenseRow &) const = default;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;                 // objective at the optimum
    std::vector<Rational> point;    // an optimal vertex
};

/// Minimizes `objective . x` over the rows with every variable >= 0.
/// Exact two-phase simplex with Bland's rule; charges fuel per pivot.
LpResult lp_minimize(std::span<const DenseRow> rows, std::span<const Rational> objective,
                     std::size_t num_vars);

/// Feasibility only; returns a witness point when feasible.
LpResult lp_feasible(std::span<const DenseRow> rows, std::size_t num_vars);

} // namespace terminfer
