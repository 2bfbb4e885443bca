#pragma once

#include "terminfer/linear.hpp"
#include "terminfer/polyhedron.hpp"
#include "terminfer/program.hpp"

#include <map>
#include <string>
#include <vector>

namespace terminfer {

/// Linear norm mapping terms to size expressions over their variables.
class Norm {
public:
    virtual ~Norm() = default;
    virtual LinExpr size(const Term &t) const = 0;
};

/// ||f(t1..tn)|| = 1 + sum ||ti||, constants and integers 0, a variable its
/// own size.
class TermSizeNorm : public Norm {
public:
    LinExpr size(const Term &t) const override;
};

LinExpr term_size(const Term &t);

struct NumAtom {
    PredId pred;
    std::vector<LinExpr> args;

    std::string to_string() const;
};

/// Clause of the CLP(N) abstraction. Size variables carry the names of the
/// source variables and range over the naturals.
struct NumClause {
    NumAtom head;
    std::vector<NumAtom> body;
    /// Constraint over `variables`; the term-size abstraction adds none.
    Polyhedron constraint;
    std::vector<std::string> variables;

    std::string to_string() const;
};

struct NumProgram {
    /// Defined predicates in definition order.
    std::vector<PredId> predicates;
    std::map<PredId, std::vector<NumClause>> clauses;
    /// Numeric posts of the builtin table, over x1..xN.
    std::map<PredId, Polyhedron> builtins;

    const std::vector<NumClause> &clauses_of(const PredId &p) const;
    std::string to_string() const;
};

NumClause abstract_clause(const Clause &c, const Norm &norm = TermSizeNorm());
NumProgram abstract_program(const Program &p, const Norm &norm = TermSizeNorm());

} // namespace terminfer
