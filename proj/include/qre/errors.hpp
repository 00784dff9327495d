#pragma once

#include <stdexcept>
#include <string>

namespace qre {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& msg) : Error(msg) {}
};

struct ParamMismatch : Error {
    explicit ParamMismatch(const std::string& msg) : Error(msg) {}
};

struct ExponentOverflow : Error {
    explicit ExponentOverflow(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

struct CompletionDiverged : Error {
    explicit CompletionDiverged(const std::string& msg) : Error(msg) {}
};

struct DegreeExceeded : Error {
    explicit DegreeExceeded(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg) : Error(msg) {}
};

struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& msg) : Error(msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg) : Error(msg) {}
};

struct SolutionNotUnique : Error {
    explicit SolutionNotUnique(const std::string& msg) : Error(msg) {}
};

struct DegenerateOrbit : Error {
    explicit DegenerateOrbit(const std::string& msg) : Error(msg) {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& msg) : Error(msg) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

struct NonFlat : Error {
    explicit NonFlat(const std::string& msg) : Error(msg) {}
};

struct NoIsomorphismFound : Error {
    explicit NoIsomorphismFound(const std::string& msg) : Error(msg) {}
};

struct NoAdmissibleDifferential : Error {
    explicit NoAdmissibleDifferential(const std::string& msg) : Error(msg) {}
};

} // namespace qre
