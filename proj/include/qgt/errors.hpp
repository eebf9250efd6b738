#pragma once

#include <stdexcept>
#include <string>

namespace qgt {

/// Violation of an operation's domain (bad parameters, size overflow,
/// alphabet violation, dimension mismatch). Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// File system or parse failure. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by noiseless decoders when no binary preimage exists, i.e.
/// residual noise survived rounding. Callers treat the segment as erased.
class InfeasibleMeasurement : public std::runtime_error {
 public:
  explicit InfeasibleMeasurement(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qgt
