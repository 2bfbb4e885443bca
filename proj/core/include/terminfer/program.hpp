#pragma once

#include "terminfer/builtins.hpp"
#include "terminfer/term.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace terminfer {

struct Atom {
    PredId pred;
    std::vector<Term> args;

    static Atom from_term(const Term &t);
    Term to_term() const;
    std::string to_string() const { return to_term().to_string(); }

    bool operator==(const Atom &) const = default;
};

/// Normalized clause: the body is a flat conjunction of atoms.
struct Clause {
    Atom head;
    std::vector<Atom> body;
    int line = 0;

    std::vector<std::string> variables() const;
    /// `head :- b1, b2.` or `head.`
    std::string to_string() const;

    bool operator==(const Clause &other) const { return head == other.head && body == other.body; }
};

/// Clause database in definition order, plus the builtin table it was read
/// against. Auxiliary predicates introduced by normalization are named
/// `$aux<n>` and listed separately.
class Program {
public:
    Program() = default;
    explicit Program(BuiltinTable builtins) : builtins_(std::move(builtins)) {}

    /// Appends a clause. Throws ProgramError when its predicate is imported
    /// from the builtin table.
    void add_clause(Clause c, bool auxiliary = false);

    const BuiltinTable &builtins() const { return builtins_; }

    /// Defined predicates in order of first definition.
    const std::vector<PredId> &predicates() const { return order_; }
    /// Defined predicates minus the auxiliary ones.
    std::vector<PredId> user_predicates() const;
    bool defines(const PredId &p) const { return clauses_.count(p) != 0; }
    bool is_auxiliary(const PredId &p) const { return auxiliary_.count(p) != 0; }
    const std::vector<Clause> &clauses(const PredId &p) const;

    /// Predicates called somewhere but neither defined nor builtin, in order
    /// of first call.
    std::vector<PredId> undefined_predicates() const;

    /// Clauses in definition order, one per line; reads back as the same
    /// program.
    std::string to_string() const;

private:
    BuiltinTable builtins_ = BuiltinTable::standard();
    std::vector<PredId> order_;
    std::map<PredId, std::vector<Clause>> clauses_;
    std::set<PredId> auxiliary_;
};

/// Parses and normalizes program text. Control constructs become auxiliary
/// predicates, cuts and `true` are erased, `call/N` with a known goal is
/// inlined. Throws SyntaxError or ProgramError.
Program parse_program(const std::string &text, BuiltinTable builtins = BuiltinTable::standard());
Program load_program(const std::string &path, BuiltinTable builtins = BuiltinTable::standard());

/// Normalizes the clause `head :- body`. Returns the clause followed by the
/// auxiliary clauses it needs; `fresh` yields unused auxiliary names.
std::vector<std::pair<Clause, bool>> normalize_clause(const Term &head, const Term &body, int line,
                                                      const std::function<std::string()> &fresh);

} // namespace terminfer
