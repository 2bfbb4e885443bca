#pragma once

#include "terminfer/linear.hpp"
#include "terminfer/lp.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace terminfer {

/// Convex polyhedron over named, implicitly non-negative rational variables,
/// kept in a canonical constraint form: the affine hull as a reduced
/// row-echelon system of equalities, followed by the irredundant facet
/// inequalities reduced modulo those equalities, each scaled to coprime
/// integers and sorted. Two polyhedra over the same dimension list are equal
/// as sets iff they compare equal with operator==.
///
/// The non-negativity constraints are never stored.
class Polyhedron {
public:
    /// Zero-dimensional universe.
    Polyhedron() = default;

    static Polyhedron universe(std::vector<std::string> dims);
    static Polyhedron empty(std::vector<std::string> dims);
    static Polyhedron from_constraints(std::vector<std::string> dims,
                                       std::span<const LinConstraint> constraints);

    const std::vector<std::string> &dims() const { return dims_; }
    bool is_empty() const { return empty_; }
    bool is_universe() const { return !empty_ && rows_.empty(); }

    /// Canonical constraints, equalities first. Empty polyhedra yield the
    /// single constraint `-1 >= 0`.
    std::vector<LinConstraint> constraints() const;
    std::size_t constraint_count() const { return rows_.size(); }
    /// Number of inequality rows once equalities are split in two.
    std::size_t inequality_count() const;
    /// Dimension of the affine hull; -1 for the empty set.
    int affine_dimension() const;

    Polyhedron meet(const Polyhedron &other) const;
    Polyhedron add_constraints(std::span<const LinConstraint> constraints) const;
    Polyhedron add_constraint(const LinConstraint &c) const { return add_constraints({&c, 1}); }

    /// Exact existential elimination of every dimension not in `keep`. The
    /// result keeps the surviving dimensions in their original order.
    Polyhedron project(const std::vector<std::string> &keep) const;

    /// Closed convex hull of the union.
    Polyhedron hull(const Polyhedron &other) const;

    /// Standard (H79) widening of `*this` by `next`; expects this ⊑ next.
    /// Keeps the inequalities of this entailed by next, plus those of next
    /// that can replace an inequality of this without changing it.
    Polyhedron widen(const Polyhedron &next) const;

    bool entails(const LinConstraint &c) const;
    /// Set inclusion: this ⊆ other.
    bool entails(const Polyhedron &other) const;
    bool equivalent(const Polyhedron &other) const { return entails(other) && other.entails(*this); }

    /// Same constraints over new dimension names; `renaming` must be
    /// injective on dims().
    Polyhedron rename(const std::map<std::string, std::string> &renaming) const;
    /// Adds unconstrained dimensions at the end.
    Polyhedron extend(const std::vector<std::string> &extra_dims) const;

    /// Infimum of `e`; nullopt when unbounded below or empty.
    std::optional<Rational> minimum(const LinExpr &e) const;
    std::optional<Rational> maximum(const LinExpr &e) const;
    /// A point where `e` attains its infimum.
    std::optional<std::map<std::string, Rational>> minimizer(const LinExpr &e) const;
    std::optional<std::map<std::string, Rational>> sample() const;
    bool contains(const std::map<std::string, Rational> &point) const;

    /// `{x1 + x2 = x3, x1 >= 1}`, `true` for the universe, `false` for empty.
    std::string to_string() const;

    bool operator==(const Polyhedron &other) const = default;

private:
    Polyhedron(std::vector<std::string> dims, std::vector<DenseRow> rows);

    DenseRow to_row(const LinConstraint &c) const;
    LinConstraint to_constraint(const DenseRow &r) const;
    std::size_t index_of(const std::string &name) const;

    std::vector<std::string> dims_;
    std::vector<DenseRow> rows_;
    bool empty_ = false;
};

} // namespace terminfer
