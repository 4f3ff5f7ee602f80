#pragma once

#include <stdexcept>
#include <string>

namespace egan {

// Base class for every failure the library reports on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear system is singular or the condition estimate exceeds the trust threshold.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

// Squared-distance data contradicts a Euclidean embedding (wrong determinant sign).
class InvalidMetric : public Error {
public:
    using Error::Error;
};

// A vector that must lie on the unit sphere does not.
class NotUnit : public Error {
public:
    using Error::Error;
};

// Simplex (or derived object) is numerically flat beyond the accepted band.
class Degenerate : public Error {
public:
    using Error::Error;
};

// Sizes or dimensions of the arguments do not line up.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// 2x2 matrix fails the hyperbolic-SVD admissibility conditions.
class NotAdmissible : public Error {
public:
    using Error::Error;
};

// Two simplices fail the mutual-polarity test.
class NotPolar : public Error {
public:
    using Error::Error;
};

// A structural check of the matrix certificate failed beyond tolerance.
class CertificateViolation : public Error {
public:
    using Error::Error;
};

// Sphere-embedding height must be strictly positive.
class NonPositiveHeight : public Error {
public:
    using Error::Error;
};

// Sphere-embedding height so large that cancellation would dominate.
class HeightOutOfRange : public Error {
public:
    using Error::Error;
};

// Rejection sampling failed to produce a valid simplex within the retry budget.
class GenerationExhausted : public Error {
public:
    using Error::Error;
};

// A convergence table violated its monotone-approach contract.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

// Command-line or TrialConfig validation failure.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

// Catch-all for malformed arguments that have no dedicated class above.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace egan
