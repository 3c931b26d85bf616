#pragma once

#include <stdexcept>
#include <string>

namespace orepack {

// Malformed textual input (graph6, edge list, JSON instance files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed its configured cap.
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orepack
