#pragma once

#include <stdexcept>
#include <string>

namespace msg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (.seg / .mge records).
struct ParseError : Error {
    using Error::Error;
};

// Embedding reconstruction failure (unit estimate, snapping, subdivision).
struct BuildError : Error {
    using Error::Error;
};

// Violated precondition or unresolvable argument.
struct InputError : Error {
    using Error::Error;
};

// Solver failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace msg
