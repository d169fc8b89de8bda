#pragma once

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/reflector.hpp"

namespace bqdirac {

/// Unit rotor for the tachyonic rotation. The standard one is (i_0 + i_1)/√2;
/// any real quaternion of unit modulus is allowed.
class TachyonRotor {
 public:
  static TachyonRotor standard();
  static TachyonRotor identity();
  /// Throws NonUnitRotor unless r·r‡ = 1 within tol.
  static TachyonRotor from(const Biquaternion& r, double tol = kDefaultEqualityTol);

  const Biquaternion& r() const { return r_; }

 private:
  explicit TachyonRotor(const Biquaternion& r) : r_(r) {}
  Biquaternion r_;
};

/// X-type quaternions (i_0 X0~ + i_r X_r) are sandwiched by r on both sides;
/// conjugate-type (Y~‡) by r‡ on both sides.
enum class SandwichKind { direct, conjugate };

/// X0'~ = -i X1, X1'~ = -i X0, transverse components fixed. Applying it twice
/// negates (X0, X1).
ComplexFourVector tachyon_fourvector(const ComplexFourVector& x);

/// Dashed components of a real four-vector in stored-real form: (X1, X0, X2, X3).
FourVector tachyon_dashed_real(const FourVector& x);

/// The tachyonic map written out on coefficients, independent of the rotor:
/// direct (c0, c1, c2, c3) -> (-c1, c0, c2, c3),
/// conjugate (c0, c1, c2, c3) -> (c1, -c0, c2, c3).
Biquaternion tachyon_componentwise(const Biquaternion& x, SandwichKind kind = SandwichKind::direct);

Biquaternion tachyon_quaternion(const Biquaternion& x, const TachyonRotor& rotor,
                                SandwichKind kind = SandwichKind::direct);

/// Reflector(r·top·r, r‡·bottom·r‡).
Reflector tachyon_reflector(const Reflector& x, const TachyonRotor& rotor);

/// How a product of two transformed reflectors transforms:
/// DiagPair(r·upper·r‡, r‡·lower·r), so that
/// tachyon_reflector(X)·tachyon_reflector(Y) = tachyon_diag(X·Y).
DiagPair tachyon_diag(const DiagPair& d, const TachyonRotor& rotor);

/// Coordinates and energy-momentum seen from the tachyonic (dashed) frame, in
/// stored-real form: s0' = s1, s1' = s0, η' = μ, μ' = η.
struct DashedKinematics {
  double s0d = 0.0;
  double s1d = 0.0;
  double etad = 0.0;
  double mud = 0.0;
};

DashedKinematics dashed_kinematics(double s0, double s1, double eta, double mu);

/// Dashed total energy v' by two routes:
///   from_dot   = (η·ds0 - μ·ds1)/ds1   (dot product of the two four-vectors)
///   from_total = v·ds0/ds1
/// which agree whenever v·ds0 = η·ds0 - μ·ds1. Throws ZeroArcElement for ds1 = 0.
struct DashedEnergy {
  double from_dot = 0.0;
  double from_total = 0.0;
};

DashedEnergy dashed_energy(double v, double ds0, double ds1, double eta, double mu);

}  // namespace bqdirac
