#pragma once

#include <stdexcept>
#include <string>

namespace mgcolor {

// Bad arguments: unknown ids, violated call preconditions, malformed input.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input that does not parse; carries the offending line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Search budget exhausted before a definitive answer.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A guaranteed-to-succeed procedure failed: indicates a bug, never bad input.
class DefectError : public std::logic_error {
public:
    explicit DefectError(const std::string& msg) : std::logic_error(msg) {}
};

// A structural precondition discovered to be violated mid-computation.
// Carries the vertex at which the violation surfaced, when one is known.
class StructuralError : public std::runtime_error {
public:
    StructuralError(const std::string& msg, int vertex = -1)
        : std::runtime_error(msg), vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

}  // namespace mgcolor
