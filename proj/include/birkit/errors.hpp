#pragma once

#include <stdexcept>
#include <string>

namespace birkit {

// Base class for all library errors. Subclasses carry the failure kind in
// the type so callers can catch precisely.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeMismatch : Error {
    using Error::Error;
};
struct VarCountMismatch : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct UnsupportedDomain : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ZeroTuple : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct DegenerateLine : Error {
    using Error::Error;
};
struct MixedDegrees : Error {
    using Error::Error;
};
struct TooShort : Error {
    using Error::Error;
};
struct EmptyGrid : Error {
    using Error::Error;
};
struct ParamOutOfRange : Error {
    using Error::Error;
};
struct DenominatorNotUnit : Error {
    using Error::Error;
};
struct CoefficientEscapesR : Error {
    using Error::Error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NonHomogeneous : Error {
    using Error::Error;
};
struct UnknownVariable : Error {
    using Error::Error;
};
struct StepSizeUnderflow : Error {
    using Error::Error;
};
struct IterateEscapesDomain : Error {
    using Error::Error;
};
struct UnknownScenario : Error {
    using Error::Error;
};
struct BadParams : Error {
    using Error::Error;
};

// Parse errors carry the offset into the source text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace birkit
