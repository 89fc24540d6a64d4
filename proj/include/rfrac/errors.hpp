#pragma once

#include <stdexcept>
#include <string>

namespace rfrac {

// Base of everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct DivergenceError : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    using Error::Error;
};
struct CoefficientUnavailable : Error {
    using Error::Error;
};
struct CollisionError : Error {
    using Error::Error;
};
struct OutOfSpanError : Error {
    using Error::Error;
};
struct DegenerateError : Error {
    using Error::Error;
};
struct BranchBoundaryError : Error {
    using Error::Error;
};
struct SupportProximityError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace rfrac
