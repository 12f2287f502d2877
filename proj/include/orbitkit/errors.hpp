#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class for all orbitkit domain errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two partitions were expected to have the same total size.
struct SizeMismatch : Error {
    using Error::Error;
};

/// The total size of a partition has the wrong parity for the requested type
/// (type B needs an odd total, types C and D an even total).
struct ParityMismatch : Error {
    using Error::Error;
};

/// An operation needing at least one part was applied to the empty partition.
struct EmptyPartition : Error {
    using Error::Error;
};

/// Brute-force enumeration was requested beyond the configured size guard.
struct SizeGuardExceeded : Error {
    using Error::Error;
};

/// The enumerated candidate set has no unique dominance-maximum. This would
/// indicate a bug in the caller or in the enumeration itself; it must never
/// fire for valid inputs.
struct NoUniqueMaximum : Error {
    using Error::Error;
};

/// A partition does not belong to the partition class of the requested type.
struct TypeMismatch : Error {
    using Error::Error;
};

/// A parameter operation was called in the wrong context
/// (L-parameter vs. Arthur).
struct ContextMismatch : Error {
    using Error::Error;
};

/// A division-algebra computation needs s-values that are absent.
struct MissingDivisionData : Error {
    using Error::Error;
};

/// An integer divisibility constraint of the division-algebra maps failed.
struct DivisibilityError : Error {
    using Error::Error;
};

/// Text input failed to parse. `position` is a 0-based byte offset.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// A declared ambient dimension disagrees with the summand contributions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// The stated hypotheses of a checked lemma or corollary do not hold for the
/// given inputs.
struct PreconditionViolated : Error {
    using Error::Error;
};

} // namespace orbitkit
