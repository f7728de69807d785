#pragma once

#include <stdexcept>
#include <string>

namespace minkpair {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (bad JSON, asymmetric matrix, bad rational literal).
struct ParseError : Error {
    using Error::Error;
};

// First metric fails the det g < 0 signature test.
struct SignatureError : Error {
    using Error::Error;
};

// Numerically invalid argument (non-finite value, atanh argument outside (-1,1),
// nonpositive parabolic parameter).
struct DomainError : Error {
    using Error::Error;
};

// A case-specific construction was invoked on data from a different case.
struct WrongBranchError : Error {
    using Error::Error;
};

// Transition matrix is singular (or declared singular under the policy).
struct InvalidTransitionError : Error {
    using Error::Error;
};

// sigma requested for a pair whose discriminant is not zero.
struct ClassMismatchError : Error {
    using Error::Error;
};

// A normalization the theory allows turned out degenerate in floating point.
struct DegeneracyError : Error {
    using Error::Error;
};

// Two supposedly equivalent computation routes disagree beyond tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace minkpair
