#ifndef STC_ERRORS_HPP
#define STC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stc {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct OverflowToFloat : Error {
    OverflowToFloat() : Error("magnitude exceeds double range") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct NotNilpotent : Error {
    NotNilpotent() : Error("matrix is not nilpotent") {}
};

struct VariableCountMismatch : Error {
    VariableCountMismatch() : Error("polynomials have different variable counts") {}
};

// Symbolic computation exceeded the term-count ceiling; callers fall back
// to randomized instantiation.
struct SymbolicBlowup : Error {
    explicit SymbolicBlowup(const std::string& msg) : Error("symbolic blowup: " + msg) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error("no convergence: " + msg) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& msg) : Error("hypothesis violated: " + msg) {}
};

struct UnknownScenario : Error {
    explicit UnknownScenario(const std::string& name) : Error("unknown scenario: " + name) {}
};

struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& msg) : Error("unsupported size: " + msg) {}
};

// Malformed textual input (scalar grammar, matrix JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace stc

#endif
