#include "bqdirac/errors.hpp"

namespace bqdirac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitRotor: return "NonUnitRotor";
    case ErrorKind::NonpositiveRadiusParameter: return "NonpositiveRadiusParameter";
    case ErrorKind::LightConePoint: return "LightConePoint";
    case ErrorKind::InvalidChart: return "InvalidChart";
    case ErrorKind::NonpositiveMass: return "NonpositiveMass";
    case ErrorKind::DispersionViolation: return "DispersionViolation";
    case ErrorKind::SuperluminalSpeed: return "SuperluminalSpeed";
    case ErrorKind::ZeroArcElement: return "ZeroArcElement";
    case ErrorKind::InvalidQuantumNumber: return "InvalidQuantumNumber";
    case ErrorKind::SpeedDomain: return "SpeedDomain";
    case ErrorKind::ZeroCharge: return "ZeroCharge";
    case ErrorKind::SingularBiquaternion: return "SingularBiquaternion";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::domain_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace bqdirac
