#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Malformed input: coloring files, graph files, target specs, kappa tables.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A detector or search ran out of its node-expansion budget. Carries partial
// information in the message; never a wrong answer.
struct BudgetExhaustedError : std::runtime_error {
    explicit BudgetExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramsey
