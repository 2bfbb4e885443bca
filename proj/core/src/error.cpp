#include "terminfer/error.hpp"

namespace terminfer {

SyntaxError::SyntaxError(const std::string &message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

} // namespace terminfer
