#pragma once

#include <stdexcept>
#include <string>

namespace eccspectra {

enum class ErrorKind {
    Syntax,        // malformed edge-list or matrix text
    Loop,          // self-loop in input
    Duplicate,     // repeated edge
    LabelRange,    // vertex label outside 1..n
    Disconnected,  // operation requires a connected graph
    NotClassB,     // operation requires membership in class B
    Hypothesis,    // e.g. diameter < 4 where a theorem needs it
    Infeasible,    // generator exhausted its retry budget
    Invalid,       // any other precondition violation
    Convergence,   // float eigensolver ran out of sweeps
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Loop: return "loop";
    case ErrorKind::Duplicate: return "duplicate";
    case ErrorKind::LabelRange: return "label-range";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotClassB: return "not-class-b";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Invalid: return "invalid";
    case ErrorKind::Convergence: return "convergence";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax error carrying a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(ErrorKind::Syntax,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace eccspectra
