#pragma once

#include <span>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/circle_spaces.hpp"
#include "bqdirac/tachyon.hpp"

namespace bqdirac {

// Batch checks used by the verification suites. Each has a serial twin that
// the tests hold the parallel version to, bit for bit.

/// Largest |rotor sandwich - componentwise map| over xs, both sandwich kinds.
double rotor_agreement_error(std::span<const Biquaternion> xs, const TachyonRotor& rotor);
double rotor_agreement_error_serial(std::span<const Biquaternion> xs, const TachyonRotor& rotor);

/// Largest |p - to->from(from->to(p))| over points given in chart `from`.
double round_trip_error(std::span<const Point4> points, const SpaceChart& from, const SpaceChart& to);
double round_trip_error_serial(std::span<const Point4> points, const SpaceChart& from, const SpaceChart& to);

}  // namespace bqdirac
