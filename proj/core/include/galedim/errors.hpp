#pragma once

#include <stdexcept>
#include <string>

namespace galedim {

// Input violates a documented precondition (bad parameter range, malformed object).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Structurally invalid aggregate (not a prefix set, bets that do not sum, bad transition table).
struct StructureError : std::invalid_argument {
    explicit StructureError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation exceeded its declared size/state budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric search failed to converge or left its feasible region.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// File or stream problem.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace galedim
