#ifndef IDPOLY_ERRORS_HPP
#define IDPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idpoly {

// Input text could not be parsed; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Instance exceeds the configured size bound of an algorithm.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is structurally unsuitable for the requested algorithm
// (e.g. a loop-bearing graph passed to a simple-graph formula).
struct InputMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace idpoly

#endif
