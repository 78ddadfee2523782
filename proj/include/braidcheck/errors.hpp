#pragma once

#include <stdexcept>
#include <string>

namespace braidcheck {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes (N, arity) do not match.
struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Division by zero, singular linear system, or pole of a current R-matrix.
struct SingularError : Error {
    explicit SingularError(const std::string& msg) : Error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Scalar literal / matrix file syntax error; offset is the byte position
// inside the offending literal.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte " + std::to_string(byte_offset) + ")"), offset(byte_offset) {}
    std::size_t offset;
};

// A structural precondition on the input data failed (bad g-matrix,
// incompatible pair, kind/symmetry mismatch, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct NotSkewInvertibleError : Error {
    explicit NotSkewInvertibleError(const std::string& msg) : Error(msg) {}
};

} // namespace braidcheck
