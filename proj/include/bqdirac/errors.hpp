#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqdirac {

enum class ErrorKind {
  NonUnitRotor,
  NonpositiveRadiusParameter,
  LightConePoint,
  InvalidChart,
  NonpositiveMass,
  DispersionViolation,
  SuperluminalSpeed,
  ZeroArcElement,
  InvalidQuantumNumber,
  SpeedDomain,
  ZeroCharge,
  SingularBiquaternion,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The kind identifies the violated
/// precondition; what() carries the offending values.
class Error : public std::domain_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bqdirac
