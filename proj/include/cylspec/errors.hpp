#pragma once

#include <stdexcept>
#include <string>

namespace cylspec {

// Error taxonomy maps 1:1 onto CLI exit codes (see tools/).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated hypothesis: super-indicial weight, borderline b, wrong operator order, ...
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergentError : std::runtime_error {
    explicit NonConvergentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Divergent tail integral / function not in the requested weighted space.
struct DivergentError : std::runtime_error {
    explicit DivergentError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cylspec
