#pragma once

#include "terminfer/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace terminfer {

enum class OpType { XFX, XFY, YFX, FY, FX };

struct OpDef {
    int priority;
    OpType type;
};

/// Fixed operator table of the supported Prolog subset.
class OperatorTable {
public:
    static OperatorTable standard();

    void add_infix(const std::string &name, int priority, OpType type) { infix_[name] = {priority, type}; }
    void add_prefix(const std::string &name, int priority, OpType type) { prefix_[name] = {priority, type}; }

    const OpDef *infix(const std::string &name) const;
    const OpDef *prefix(const std::string &name) const;

private:
    std::map<std::string, OpDef> infix_;
    std::map<std::string, OpDef> prefix_;
};

/// A clause-level term read from source, with its 1-based starting line.
/// Anonymous variables get distinct fresh names.
struct ReadTerm {
    Term term;
    int line = 0;
    int column = 0;
};

/// Reads every `.`-terminated term of `text`. Throws SyntaxError.
std::vector<ReadTerm> read_terms(const std::string &text, const OperatorTable &ops = OperatorTable::standard());

/// Reads a single term, with or without a final `.`.
Term read_term(const std::string &text, const OperatorTable &ops = OperatorTable::standard());

} // namespace terminfer
