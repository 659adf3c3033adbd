#pragma once

#include <stdexcept>
#include <string>

namespace asearch {

// Root of every error the library raises. All of them signal a contract
// violation by the caller; none are recoverable inside the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Input vector too far from unit norm to be silently rescaled.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// |<s|w>| == 1: s and w span a single direction, no orthogonal partner exists.
class DegenerateOverlapError : public Error {
public:
    using Error::Error;
};

// x == 0: the driver never moves amplitude onto |w>.
class NoRotationError : public Error {
public:
    using Error::Error;
};

// Closed-form two-level results only hold when oracle and driver share E.
class UnequalScaleError : public Error {
public:
    using Error::Error;
};

class BasisError : public Error {
public:
    using Error::Error;
};

class ScheduleError : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

} // namespace asearch
