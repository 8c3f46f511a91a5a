#pragma once

#include <stdexcept>
#include <string>

namespace specham {

// Malformed textual input (graph6 / edge list / CLI spec strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (bad vertex id, wrong
// parameter range, structural precondition not met).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An iteration/node budget ran out before the computation finished.
// Always thrown, never silently swallowed: callers must either enlarge the
// budget or treat the instance as undecided.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace specham
