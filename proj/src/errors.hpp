#pragma once

#include <stdexcept>
#include <string>

namespace propcalc {

// Thrown when an operation is asked to exceed a configured finite bound
// (vertex count, simplicial dimension, arity, horn dimension).
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Profile (arity/color) mismatch between a vertex and the graph meant to
// replace it, or between grafted ends.
struct ProfileError : std::runtime_error {
    explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

// Graph handed to an operation that requires membership in a pasting scheme
// it does not belong to.
struct SchemeError : std::runtime_error {
    explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid value (failed invariant).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace propcalc
