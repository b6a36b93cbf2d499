#pragma once

#include <stdexcept>
#include <string>

namespace setlab {

/// Raised by the text-format parsers; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Raised when an input exceeds a solver's hard instance-size guard.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace setlab
