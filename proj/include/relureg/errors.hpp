#pragma once

#include <stdexcept>
#include <string>

namespace relureg {

// Bad inputs: shape mismatches, broken invariants, out-of-range arguments.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external data: unreadable files, bad magic numbers, bad JSON.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace relureg
