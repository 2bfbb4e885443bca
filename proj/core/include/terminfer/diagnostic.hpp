#pragma once

#include "terminfer/builtins.hpp"

#include <string>
#include <vector>

namespace terminfer {

/// A degraded SCC: which step gave up and why.
struct Diagnostic {
    std::vector<PredId> scc;
    std::string step;
    std::string note;

    /// `numeric model {p/1, q/1}: fuel exhausted`
    std::string to_string() const;
};

} // namespace terminfer
