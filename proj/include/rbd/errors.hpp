#pragma once

#include <stdexcept>
#include <string>

namespace rbd {

// Mismatched lattice ranks, wrong vector lengths, and the like.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Graph shape violations: disconnected, cyclic where a tree is required, ...
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad numeric input (odd Wahl parameter, negative count, non-coprime pair).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A stated hypothesis of an operation does not hold; the message names it.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search ran out of its node budget before deciding either way.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rbd
