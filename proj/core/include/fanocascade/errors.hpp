#pragma once

#include <stdexcept>

namespace fano {

/// Fewer than three non-collinear points were supplied to a hull routine.
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A polygon operation required a Fano polygon (primitive vertices, origin
/// strictly interior) and the input is not one.
struct NotFano : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two rays supposed to span a cone are linearly dependent.
struct DependentRays : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dualization requires the origin strictly inside the polygon.
struct OriginNotInterior : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A divisor with a negative multidegree was passed where a nef one is needed.
struct NotNef : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scaffolding failed validation against its polygon.
struct InvalidScaffolding : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No divisor on the requested shape has the polygon as its section polytope.
struct NoSuchDivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A complete intersection degree equals one of the ambient weights, so the
/// variety is a weighted linear cone and the quasismoothness test is void.
struct LinearCone : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The pairing has no room for roots at these parameters.
struct DegenerateLattice : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A simple-root diagram is none of the simply laced Dynkin types.
struct UnrecognizedDiagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
struct InternalMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mutation was requested whose factor does not divide every slice.
struct InvalidMove : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A catalog parameter is outside the documented range.
struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A catalog identifier does not name any stored family.
struct UnknownId : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A series manipulation would produce a surface of non-positive degree.
struct DegreeNonPositive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace fano
