#pragma once

#include <stdexcept>
#include <string>

namespace qkick {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// numerics
class OverflowError : public Error { using Error::Error; };
class ConvergenceError : public Error { using Error::Error; };

// hamiltonian / propagators
class KickPointwiseError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class SpacingError : public Error { using Error::Error; };

// state handling and integration
class NormalizationError : public Error { using Error::Error; };
class StepSizeUnderflow : public Error { using Error::Error; };
class SpectrumError : public Error { using Error::Error; };
class UnknownLabel : public Error { using Error::Error; };

// scan / cli
class WindowError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

}  // namespace qkick
