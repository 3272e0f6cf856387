#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

// Thrown by exhaustive checkers when the graph order exceeds the
// configured enumeration cap (see limits.hpp).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a criterion check asks for |H| = m edges but no admissible
// edge set of that size exists anywhere in the instance.
class InsufficientEdgesError : public std::runtime_error {
public:
    explicit InsufficientEdgesError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace factorlab
