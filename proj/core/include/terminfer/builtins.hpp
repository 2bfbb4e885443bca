#pragma once

#include "terminfer/boolfun.hpp"
#include "terminfer/polyhedron.hpp"

#include <compare>
#include <map>
#include <string>

namespace terminfer {

struct PredId {
    std::string name;
    std::size_t arity = 0;

    std::string to_string() const;

    auto operator<=>(const PredId &) const = default;
    bool operator==(const PredId &) const = default;
};

/// Argument variable names x1..xN.
std::vector<std::string> argument_names(std::size_t arity);

/// Pre-analyzed predicate: numeric post over the argument sizes, boolean
/// post and termination condition, all over x1..xN.
struct BuiltinEntry {
    Polyhedron num;
    BoolFun post;
    BoolFun pre;
};

class BuiltinTable {
public:
    /// The default table.
    static BuiltinTable standard();

    /// Adds or replaces an entry. Throws TableError when a formula mentions
    /// an argument beyond the arity or the boolean post is not positive.
    void define(const PredId &p, BuiltinEntry entry);

    const BuiltinEntry *find(const PredId &p) const;
    bool contains(const PredId &p) const { return find(p) != nullptr; }
    const std::map<PredId, BuiltinEntry> &entries() const { return entries_; }

    /// Merges entries of the table file text over this table; later entries
    /// shadow earlier ones. Throws SyntaxError or TableError.
    void load_text(const std::string &text);
    void load_file(const std::string &path);

private:
    std::map<PredId, BuiltinEntry> entries_;
};

} // namespace terminfer
