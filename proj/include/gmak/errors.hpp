#ifndef GMAK_ERRORS_HPP
#define GMAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmak {

// Syntax error in network text; line/col are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// A structural invariant of the network (or of an operation's input) is violated.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg)
        : std::runtime_error("validation error: " + msg) {}
};

// An operation's mathematical hypothesis does not hold (e.g. weak reversibility).
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sign-vector enumeration refused: ambient dimension above the configured limit.
class EnumerationLimitError : public std::runtime_error {
public:
    explicit EnumerationLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Pseudo-reaction rewriting produced a negative stoichiometric coefficient.
class TransformError : public std::runtime_error {
public:
    explicit TransformError(const std::string& msg) : std::runtime_error(msg) {}
};

// Floating-point guard tripped (exponent overflow, minimum step underflow, non-finite state).
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gmak

#endif
