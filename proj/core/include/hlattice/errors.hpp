#pragma once

#include <stdexcept>
#include <string>

namespace hlattice {

// Base for all domain-rule violations. The CLI maps these to exit code 1;
// usage errors (bad flags, malformed arguments) are handled separately.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |x| is not congruent to +-1 mod 6, so x lies outside the lattice.
struct NotHMember : DomainError {
    explicit NotHMember(long long x)
        : DomainError("not an H member: " + std::to_string(x)) {}
};

// An operation required a prime argument and got a composite or unit.
struct NotPrime : DomainError {
    explicit NotPrime(long long x)
        : DomainError("not a prime: " + std::to_string(x)) {}
};

// Argument outside the operation's documented domain.
struct OutOfDomain : DomainError {
    using DomainError::DomainError;
};

// 64-bit signed arithmetic would wrap.
struct OverflowError : DomainError {
    using DomainError::DomainError;
};

// Requested segment exceeds the configured memory budget.
struct RangeTooLarge : DomainError {
    using DomainError::DomainError;
};

// Even number's residue class does not admit the requested quadrant.
struct QuadrantMismatch : DomainError {
    using DomainError::DomainError;
};

// A census failed its exact counting identity. Indicates a code bug,
// never expected to fire.
struct IdentityViolation : DomainError {
    using DomainError::DomainError;
};

// Pairing trace requested for a prime below the second section (p < 23).
struct NotInSecondSection : DomainError {
    explicit NotInSecondSection(long long p)
        : DomainError("pairing trace needs p >= 23, got " + std::to_string(p)) {}
};

// The multiple overhang of a pairing trace came out negative.
struct OverhangNegative : DomainError {
    using DomainError::DomainError;
};

// Offset not of the form 6i, 6i+2 or 6i+4 (i.e. odd or negative).
struct BadOffset : DomainError {
    explicit BadOffset(long long d)
        : DomainError("offset must be a non-negative even number, got " + std::to_string(d)) {}
};

// Line parallel to a coordinate axis carries no usable slope.
struct AxisParallel : DomainError {
    using DomainError::DomainError;
};

// Two coincident points do not determine a line.
struct DegeneratePoints : DomainError {
    using DomainError::DomainError;
};

} // namespace hlattice
