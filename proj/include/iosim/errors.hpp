#pragma once

#include <stdexcept>
#include <string>

namespace iosim {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent configuration / input file contents. CLI exit code 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Bad geometry or sweep request (degenerate vectors, target outside sweep).
// CLI exit code 3.
class GeometryError : public Error {
public:
  using Error::Error;
};

// Request exceeds a solver or mode capability bound. CLI exit code 4.
class CapabilityError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// An immittance collapsed to a short or open circuit (|value| > 1e12).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

// Angle query outside the convex hull of a parameter table.
class ExtrapolationError : public Error {
public:
  using Error::Error;
};

// Denominator of the scattering formulas vanished.
class SingularityError : public Error {
public:
  using Error::Error;
};

// Mismatched dimensions between containers that must agree.
class ShapeError : public Error {
public:
  using Error::Error;
};

} // namespace iosim
