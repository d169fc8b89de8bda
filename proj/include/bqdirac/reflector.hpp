#pragma once

#include <array>
#include <functional>

#include "bqdirac/biquaternion.hpp"

namespace bqdirac {

/// Block-diagonal [[upper, 0], [0, lower]]; what a product of two reflectors
/// collapses to.
struct DiagPair {
  Biquaternion upper;
  Biquaternion lower;

  static DiagPair identity() { return {Biquaternion::one(), Biquaternion::one()}; }

  friend bool operator==(const DiagPair&, const DiagPair&) = default;
};

/// Off-diagonal block matrix [[0, top], [bottom, 0]].
struct Reflector {
  Biquaternion top;
  Biquaternion bottom;

  /// The usual pairing X(X, X‡).
  static Reflector of(const Biquaternion& q) { return {q, conj(q)}; }

  friend bool operator==(const Reflector&, const Reflector&) = default;
};

DiagPair reflector_mul(const Reflector& a, const Reflector& b);

inline DiagPair operator*(const Reflector& a, const Reflector& b) { return reflector_mul(a, b); }
Reflector operator*(const DiagPair& d, const Reflector& r);
Reflector operator*(const Reflector& r, const DiagPair& d);
DiagPair operator*(const DiagPair& a, const DiagPair& b);

Reflector operator+(const Reflector& a, const Reflector& b);
Reflector operator-(const Reflector& a, const Reflector& b);
Reflector operator*(Complex s, const Reflector& r);
DiagPair operator+(const DiagPair& a, const DiagPair& b);
DiagPair operator-(const DiagPair& a, const DiagPair& b);

/// Larger of the two block magnitudes.
double magnitude(const DiagPair& d);
double magnitude(const Reflector& r);

/// True when |r·r‡ - 1| <= tol.
bool is_unit(const Biquaternion& r, double tol = kDefaultEqualityTol);

/// r·x·r. Throws NonUnitRotor unless r is unit.
Biquaternion sandwich(const Biquaternion& r, const Biquaternion& x, double tol = kDefaultEqualityTol);

/// Reflector(r·top·r, r‡·bottom·r‡). Throws NonUnitRotor unless r is unit.
Reflector sandwich(const Biquaternion& r, const Reflector& x, double tol = kDefaultEqualityTol);

// ---------------------------------------------------------------------------
// Dirac equation (D - ieA~)Φ = ΦM~ checked as its two block equations.

/// Chart coordinates (x0, x1, x2, x3), or (s0, s1, r1, r0) after a chart has
/// been renamed onto Cartesian axes.
using Point4 = std::array<double, 4>;

using Field = std::function<Biquaternion(const Point4&)>;

/// Partial derivatives of a field along the four chart axes.
using Gradient = std::array<Biquaternion, 4>;

/// Φ(φ1, φ2). The gradients are optional analytic derivatives.
struct WaveFunction {
  Field phi1;
  Field phi2;
  std::function<Gradient(const Point4&)> grad1;
  std::function<Gradient(const Point4&)> grad2;

  bool has_analytic_gradient() const { return static_cast<bool>(grad1) && static_cast<bool>(grad2); }
  Reflector at(const Point4& p) const { return {phi1(p), phi2(p)}; }
};

/// Computes the gradient of a field at a point.
using DerivativeOperator = std::function<Gradient(const Field&, const Point4&)>;

/// Second-order central differences with step h on every axis.
DerivativeOperator central_difference(double h);

/// Applies D (or D‡ when conjugate is set) to a field given its gradient:
/// D = i·i_0 ∂0 + i_1 ∂1 + i_2 ∂2 + i_3 ∂3. The temporal partial is taken with
/// respect to the tilde coordinate x0/i, which is what keeps D·D‡ Minkowskian.
Biquaternion apply_d(const Gradient& grad, bool conjugate);

/// DiagPair((D - ieA~)φ2, (D‡ - ieA~‡)φ1) at point, with A~ multiplying from the left.
DiagPair dirac_lhs(const DerivativeOperator& d_apply, const Biquaternion& potential, double charge,
                   const WaveFunction& phi, const Point4& point);

/// Same as dirac_lhs but using the wave function's analytic gradients.
DiagPair dirac_lhs_analytic(const Biquaternion& potential, double charge, const WaveFunction& phi,
                            const Point4& point);

/// Φ·M~(M~, -M~‡) = DiagPair(-φ1·M~‡, φ2·M~); the mass multiplies from the right.
DiagPair dirac_rhs(const WaveFunction& phi, const Biquaternion& mass_term, const Point4& point);

}  // namespace bqdirac
