#pragma once

#include <stdexcept>
#include <string>

namespace angmom {

//! Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! A (j, m) pair or a coupling input violates the angular-momentum rules.
class InvalidQuantumNumbers : public Error {
public:
  using Error::Error;
};

//! The operation is defined for integer j only (spherical harmonics).
class HalfIntegerUnsupported : public Error {
public:
  using Error::Error;
};

//! The classically allowed band is empty (|m| = j for the leading WKB form).
class DegenerateBand : public Error {
public:
  using Error::Error;
};

class NonAscendingEdges : public Error {
public:
  using Error::Error;
};

class InvalidAngles : public Error {
public:
  using Error::Error;
};

class NonPositiveLength : public Error {
public:
  using Error::Error;
};

//! Any other out-of-domain scalar argument (grid sizes, resolutions, counts).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace angmom
