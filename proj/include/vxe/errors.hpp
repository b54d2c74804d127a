#pragma once

#include <stdexcept>
#include <string>

namespace vxe {

// Base of every error thrown by the library. The CLI maps the two
// families below onto exit codes 2 and 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input documents (edge lists).
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class SelfLoopError : public InputError {
public:
    SelfLoopError(std::size_t line, std::size_t vertex)
        : InputError("line " + std::to_string(line) + ": self-loop at vertex " +
                     std::to_string(vertex)) {}
};

// Everything that goes wrong after a graph has been read.
class ComputationError : public Error {
public:
    using Error::Error;
};

class OutOfRange : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class OverflowError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DisconnectedError : public ComputationError {
public:
    DisconnectedError() : ComputationError("graph is not connected") {}
    using ComputationError::ComputationError;
};

class SizeCapExceeded : public ComputationError {
public:
    SizeCapExceeded(std::size_t n, std::size_t cap)
        : ComputationError("matrix order " + std::to_string(n) + " exceeds the eigensolver cap " +
                           std::to_string(cap)) {}
};

class ConvergenceFailure : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotBipartite : public ComputationError {
public:
    NotBipartite() : ComputationError("graph is not bipartite") {}
};

class EmptyGraph : public ComputationError {
public:
    EmptyGraph() : ComputationError("graph has no edges") {}
};

class ZeroDegree : public ComputationError {
public:
    explicit ZeroDegree(std::size_t v)
        : ComputationError("vertex " + std::to_string(v) + " has degree 0") {}
};

class BadExponent : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NegativeRadicand : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class BadParameters : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class UnsupportedModel : public ComputationError {
public:
    using ComputationError::ComputationError;
};

} // namespace vxe
