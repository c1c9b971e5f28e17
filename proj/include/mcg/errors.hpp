#ifndef MCG_ERRORS_HPP
#define MCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcg {

// Malformed textual input (graph encodings, cache files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

// An operation was handed a graph that fails validate().
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string &what) : std::runtime_error(what) {}
};

// Illegal elementary move (collapsing a loop, undersized split part, ...).
struct MoveError : std::runtime_error {
  explicit MoveError(const std::string &what) : std::runtime_error(what) {}
};

// A relabeling was applied to a graph outside its domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

// A computation exceeded its wall-clock or node budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

} // namespace mcg

#endif
