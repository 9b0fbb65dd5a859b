#pragma once

#include <stdexcept>
#include <string>

namespace qedsat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveMu : Error {
    using Error::Error;
};
struct NonPositiveMass : Error {
    using Error::Error;
};
struct AngleOutOfRange : Error {
    using Error::Error;
};

// A propagator denominator vanished below tolerance; the sampling point
// sits on a collinear singularity and the amplitude is not meaningful.
struct CollinearPole : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};
struct SolverFailure : Error {
    using Error::Error;
};
struct PatternViolation : Error {
    using Error::Error;
};
struct ComplexParams : Error {
    using Error::Error;
};
struct DegenerateMap : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qedsat
