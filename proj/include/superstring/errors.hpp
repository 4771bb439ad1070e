#pragma once

#include <stdexcept>
#include <string>

namespace superstring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction-time validation failures (empty string, symbol outside the alphabet).
struct InvalidString : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// normalize() received an empty collection.
struct EmptyInstance : Error {
    using Error::Error;
};

// An exact solver or enumeration was asked to exceed its configured bound.
struct InstanceTooLarge : Error {
    using Error::Error;
};

// bar()/unbar() applied to a string that is not entirely on the expected side.
struct MixedAlphabet : Error {
    using Error::Error;
};

// A circular string lacks base or barred symbols, so no qualifying rotation exists.
struct MonochromaticCircular : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct NoSolutionWithinBound : Error {
    using Error::Error;
};

// Every candidate cyclic order failed superstring validation.
struct NoValidCandidate : Error {
    using Error::Error;
};

struct NotIndependent : Error {
    using Error::Error;
};

struct NotMaximal : Error {
    using Error::Error;
};

// A decoded selection failed its superstring predicate.
struct ValidationFailed : Error {
    using Error::Error;
};

}  // namespace superstring
