#pragma once

#include <stdexcept>
#include <string>

namespace monosync {

/// Raised when an exact search exceeds its configured node or size budget.
/// Budgets make failure explicit: an oracle either answers correctly or
/// refuses, it never degrades to a wrong answer.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Raised by the polynomial algorithms when their output contradicts the
/// monotonicity precondition in a cheaply detectable way (e.g. every pair of
/// a subset is synchronizable but no pair word synchronizes the subset).
class NotMonotonicEvidenceError : public std::runtime_error {
public:
    explicit NotMonotonicEvidenceError(const std::string& what)
        : std::runtime_error(what) {}
};

class NotStronglyConnectedError : public std::invalid_argument {
public:
    explicit NotStronglyConnectedError(const std::string& what)
        : std::invalid_argument(what) {}
};

class EmptySubsetError : public std::invalid_argument {
public:
    explicit EmptySubsetError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Text-format error carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace monosync
