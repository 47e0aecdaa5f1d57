#pragma once

#include <stdexcept>
#include <string>

namespace sfk {

/// Failure categories. Input/validation kinds map to CLI exit code 2,
/// numerical kinds to exit code 3.
enum class ErrorKind {
    // input / validation
    NonPrimitiveNormal,
    DelzantViolation,
    ParallelUnboundedEdges,
    EmptyInterior,
    FacetsNotAdjacent,
    BadInput,
    InadmissibleParameter,
    BoundaryEvaluation,
    // numerical
    DegenerateIntersection,
    DegenerateJacobian,
    QuadratureFailure,
    PathLeavesHalfPlane,
    StencilLeavesDomain,
    NewtonDivergence,
    NumericalUnderflow,
    SingularHessian,
    AmbiguousClassification,
};

const char* error_kind_name(ErrorKind k);

/// Whether a failure is an input/validation problem (as opposed to a
/// numerical one); drives the CLI exit-code contract.
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sfk
