#pragma once

#include <stdexcept>
#include <string>

namespace transbend {

// Bad input data: malformed curve spec, degenerate family parameters,
// incompatible grids. Maps to CLI exit code 2.
struct InvalidSpecError : std::runtime_error {
    explicit InvalidSpecError(const std::string& what) : std::runtime_error(what) {}
};

// x_u and x_v fail to be linearly independent somewhere.
struct DegenerateSurfaceError : InvalidSpecError {
    explicit DegenerateSurfaceError(const std::string& what) : InvalidSpecError(what) {}
};

// Tangent norm below the regularity threshold.
struct SingularCurveError : InvalidSpecError {
    explicit SingularCurveError(const std::string& what) : InvalidSpecError(what) {}
};

// A construction's existence hypothesis fails on the given data.
// Maps to CLI exit code 3.
struct HypothesisViolationError : std::runtime_error {
    explicit HypothesisViolationError(const std::string& what) : std::runtime_error(what) {}
};

// Deformation parameter outside the admissible interval. CLI exit code 4.
struct ParameterRangeError : std::runtime_error {
    explicit ParameterRangeError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace transbend
