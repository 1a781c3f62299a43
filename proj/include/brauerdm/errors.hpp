#pragma once

#include <stdexcept>
#include <string>

namespace brauerdm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// inner shape is not contained in the outer shape
struct NotContained : Error {
    using Error::Error;
};

// a truncated sequence is too short to decide the question asked of it
struct PrefixTooShort : Error {
    using Error::Error;
};

// an arc operator was applied to a set it does not act on
struct NotApplicable : Error {
    using Error::Error;
};

// an operation was invoked on data outside its stated domain
struct PreconditionViolated : Error {
    using Error::Error;
};

// no partition maps to the requested rank set within the given block
struct NotInImage : Error {
    using Error::Error;
};

// a box removal was requested across blocks of different singularity degree
struct SingularityMismatch : Error {
    using Error::Error;
};

// malformed textual input
struct ParseError : Error {
    using Error::Error;
};

// serialization format name not recognized
struct UnknownFormat : Error {
    using Error::Error;
};

// point counts differ by an odd amount, or a size is out of range
struct ParityError : Error {
    using Error::Error;
};

// a dimension identity that certifies the closed form failed to hold
struct IdentityViolation : Error {
    using Error::Error;
};

// an invariant the library relies on failed; indicates a bug, not bad input
struct InternalError : Error {
    using Error::Error;
};

}  // namespace brauerdm
