#pragma once

#include <stdexcept>
#include <string>

namespace hgx {

// Raised when a configurable search/enumeration cap is hit. Callers can widen
// the budget and retry; a budget error is never a wrong answer.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text format readers; carries a 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace hgx
