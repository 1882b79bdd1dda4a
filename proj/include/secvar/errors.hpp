#pragma once

#include <stdexcept>
#include <string>

namespace secvar {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed arguments that violate a documented precondition.
struct UsageError : Error { using Error::Error; };

// Modulus failed the primality test.
struct CompositeModulus : Error { using Error::Error; };

// Modulus is prime but below the supported minimum (2^31).
struct ModulusTooSmall : Error { using Error::Error; };

// Jet lift was given the same direction index twice.
struct DuplicateDirection : Error { using Error::Error; };

// Evaluation point length does not match the map arity.
struct ArityMismatch : Error { using Error::Error; };

// Variable or coordinate index out of range.
struct IndexOutOfRange : Error { using Error::Error; };

// Matrix dimensions incompatible with the requested operation.
struct ShapeMismatch : Error { using Error::Error; };

// Matrix has fewer independent rows/columns than the operation needs.
struct RankDeficient : Error { using Error::Error; };

// Chart pivot block is not invertible (zero value part on every
// candidate pivot), or a jet with zero value part was inverted.
struct SingularPivotBlock : Error { using Error::Error; };

// Projection target dimension is too small for the source variety.
struct TargetTooSmall : Error { using Error::Error; };

// Variety document is syntactically malformed.
struct ParseError : Error { using Error::Error; };

// Variety document is well-formed but internally inconsistent.
struct InvariantViolation : Error { using Error::Error; };

// Sampled configuration was degenerate; caller should redraw.
struct DegenerateSample : Error { using Error::Error; };

// Resampling budget was exhausted without a usable configuration.
struct SampleFailure : Error { using Error::Error; };

// Requested jet width exceeds the configured direction limit.
struct DirectionLimitExceeded : Error { using Error::Error; };

} // namespace secvar
