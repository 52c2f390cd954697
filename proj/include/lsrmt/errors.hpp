#pragma once

#include <stdexcept>
#include <string>

namespace lsrmt {

/// Malformed or contract-violating arguments.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric routine failed (non-convergence, impossible sign, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies outside a tabulated or admissible range.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Requested feature exists in the model but is not implemented (complex data).
class Unsupported : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Spectrum cannot support the requested statistic (zero blocks, no dispersion).
class DegenerateSpectrum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signal strength at or below the detectability edge, where the Gaussian
/// signal-eigenvalue asymptotics do not exist.
class PhaseTransitionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lsrmt
