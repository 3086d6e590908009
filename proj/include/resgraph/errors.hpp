// Exception hierarchy shared by the whole library.

#ifndef RESGRAPH_ERRORS_HPP
#define RESGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resgraph {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Graph data violates a structural invariant (duplicate vertex name,
/// self-loop, unknown endpoint, non-positive multiplicity, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix dimensions do not match.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The certificate criterion was applied to a matrix outside its
/// hypotheses (positive off-diagonal entry, or not symmetric).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// The intersection matrix is not negative definite, so the configuration
/// cannot be contracted to a normal surface singularity.
class NotContractible : public Error {
public:
    using Error::Error;
};

/// Operation requires a connected graph.
class DisconnectedGraph : public Error {
public:
    using Error::Error;
};

/// Z.(Z+K) came out odd. Cannot happen for integral input; indicates
/// corrupted graph data rather than a legitimate state.
class ParityViolation : public Error {
public:
    using Error::Error;
};

/// A subcycle enumeration box exceeds the configured size bound.
class BoxTooLarge : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy an operation's documented precondition.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// A blowup instruction names a curve that does not exist.
class UnknownCurve : public Error {
public:
    using Error::Error;
};

/// blowup_at was asked for curves with no intersection point left.
class NotIntersecting : public Error {
public:
    using Error::Error;
};

/// Text input is malformed. Carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A blowup script failed validation. Carries the 0-based instruction index.
class ScriptError : public Error {
public:
    ScriptError(std::size_t instruction, const std::string& what)
        : Error("instruction " + std::to_string(instruction) + ": " + what),
          instruction_(instruction) {}

    std::size_t instruction() const { return instruction_; }

private:
    std::size_t instruction_;
};

}  // namespace resgraph

#endif  // RESGRAPH_ERRORS_HPP
