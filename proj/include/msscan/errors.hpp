#pragma once

#include <stdexcept>
#include <string>

namespace msscan {

/// illumination x sensor integrates to zero; a band response cannot be formed
class DegenerateIlluminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// operation not available on this driver variant (e.g. dimming a low-voltage source)
class UnsupportedCapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// a scan was requested while no LED is energized
class NoIlluminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// not enough observations to run the requested estimator
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// no periodic structure above the significance threshold
class NoLatticeFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// base for cube container format problems
class CubeFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadMagicError : public CubeFormatError {
public:
    using CubeFormatError::CubeFormatError;
};

/// payload ends before the header-promised sample count
class TruncatedPayloadError : public CubeFormatError {
public:
    using CubeFormatError::CubeFormatError;
};

/// payload longer than the header promises
class PayloadSizeMismatchError : public CubeFormatError {
public:
    using CubeFormatError::CubeFormatError;
};

/// PGM/PPM/spectrum-text decode problems
class ImageFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// key-value configuration file problems
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace msscan
