#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

// Base class for all typed failures raised by the library. The CLI maps the
// concrete types onto stable process exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquare : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct ConvergenceFailure : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct IndexOutOfBounds : Error {
    using Error::Error;
};
struct SingularBlock : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct DependentInputs : Error {
    using Error::Error;
};
struct DegenerateSystem : Error {
    using Error::Error;
};
struct NotInKernel : Error {
    using Error::Error;
};
struct NotPsd : Error {
    using Error::Error;
};
struct BadRank : Error {
    using Error::Error;
};
struct InvalidTarget : Error {
    using Error::Error;
};
struct UnknownLemma : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace inertia
