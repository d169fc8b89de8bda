#include "bqdirac/tachyon.hpp"

#include <cmath>
#include <numbers>

#include "bqdirac/errors.hpp"

namespace bqdirac {

TachyonRotor TachyonRotor::standard() {
  return TachyonRotor(Biquaternion(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0, 0.0));
}

TachyonRotor TachyonRotor::identity() { return TachyonRotor(Biquaternion::one()); }

TachyonRotor TachyonRotor::from(const Biquaternion& r, double tol) {
  if (!is_unit(r, tol)) {
    throw Error(ErrorKind::NonUnitRotor, "tachyon rotor must satisfy r*r^conj = 1");
  }
  return TachyonRotor(r);
}

ComplexFourVector tachyon_fourvector(const ComplexFourVector& x) { return {-kI * x.z1, -kI * x.z0, x.z2, x.z3}; }

FourVector tachyon_dashed_real(const FourVector& x) { return {x.x1, x.x0, x.x2, x.x3}; }

Biquaternion tachyon_componentwise(const Biquaternion& x, SandwichKind kind) {
#ifdef BQDIRAC_MUTATE_TACHYON_SIGN
  // Deliberate fault for the mutation check: wrong sign on the i_0 coefficient.
  constexpr double sign = 1.0;
#else
  constexpr double sign = -1.0;
#endif
  if (kind == SandwichKind::direct) return {sign * x[1], x[0], x[2], x[3]};
  return {x[1], -x[0], x[2], x[3]};
}

Biquaternion tachyon_quaternion(const Biquaternion& x, const TachyonRotor& rotor, SandwichKind kind) {
  const Biquaternion r = kind == SandwichKind::direct ? rotor.r() : conj(rotor.r());
  return sandwich(r, x);
}

Reflector tachyon_reflector(const Reflector& x, const TachyonRotor& rotor) { return sandwich(rotor.r(), x); }

DiagPair tachyon_diag(const DiagPair& d, const TachyonRotor& rotor) {
  const Biquaternion& r = rotor.r();
  const Biquaternion rc = conj(r);
  return {r * d.upper * rc, rc * d.lower * r};
}

DashedKinematics dashed_kinematics(double s0, double s1, double eta, double mu) { return {s1, s0, mu, eta}; }

DashedEnergy dashed_energy(double v, double ds0, double ds1, double eta, double mu) {
  if (ds1 == 0.0) throw Error(ErrorKind::ZeroArcElement, "ds1 must be nonzero");
  return {(eta * ds0 - mu * ds1) / ds1, v * ds0 / ds1};
}

}  // namespace bqdirac
