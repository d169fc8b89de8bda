#pragma once

#include <optional>
#include <span>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/reflector.hpp"

namespace bqdirac {

// Plane-wave solutions of (D - ieA~)Φ = ΦM~ in a chart renamed onto Cartesian
// axes (s0 -> x0, s1 -> x1, r1 -> x2, r0 -> x3).
//
// Tilde quantities are stored as their real physical values. The phase
// i(ν~ s0~ + μ s1) with ν~ = ν/i and s0~ = s0/i therefore becomes
// exp(-iν s0 + iμ s1), and ieA~ becomes the real potential energy eA.

/// Frequency, wavenumber, rest mass and constant potential energy of a plane
/// wave. A solution requires (ν - eA)² = mass² + μ².
struct PlaneWave {
  double nu = 0.0;
  double mu = 0.0;
  double mass = 1.0;
  double eA = 0.0;
  int charge_sign = 1;

  /// (ν - eA)² - mass² - μ²
  double dispersion_defect() const;
};

/// A standing wave on the temporal circle of radius R0l carrying energy n_r/R0l.
struct CircleWave {
  int n_r = 0;
  double R0l = 1.0;
  double eta_l = 0.0;
};

CircleWave circle_wave(int n_r, double R0l);

inline constexpr double kDispersionTol = 1e-10;

/// Scalar mass term M~ = -i·mass, so M~M~‡ = -mass².
Biquaternion scalar_mass_term(double mass);

/// Free electron at rest in T: φ1 = exp(-i·mass·s0), φ2 = (D‡φ1)M~⁻¹ = i·φ1.
/// Throws NonpositiveMass.
WaveFunction free_solution(double mass);

/// φ1 = exp(-iν s0 + iμ s1), φ2 = {ν - eA - i·μ·i_1}·φ1·M~⁻¹ with scalar
/// M~ = -i·mass. Throws DispersionViolation if the dispersion defect
/// exceeds kDispersionTol.
WaveFunction bound_solution(const PlaneWave& pw);

/// Same with an arbitrary mass term; requires norm_form(M~) = -mass².
WaveFunction bound_solution(const PlaneWave& pw, const Biquaternion& mass_term);

/// The plane-wave ansatz with no dispersion check, for probing non-solutions.
WaveFunction plane_wave_candidate(const PlaneWave& pw, const Biquaternion& mass_term);

/// Constant potential A~ = embed((A0, 0, 0, 0)) with e·A0 = pw.eA and e = charge_sign.
Biquaternion plane_wave_potential(const PlaneWave& pw);
inline double plane_wave_charge(const PlaneWave& pw) { return pw.charge_sign; }

/// Max over points of |dirac_lhs - dirac_rhs|.
struct ResidualReport {
  double fd = 0.0;
  std::optional<double> analytic;
};

/// Residual with central differences of step h and, when Φ carries
/// gradients, the analytic residual. Points are evaluated in parallel.
ResidualReport residual(const WaveFunction& phi, const Biquaternion& potential, double charge,
                        const Biquaternion& mass_term, std::span<const Point4> points, double h);

/// Serial reference for residual().
ResidualReport residual_serial(const WaveFunction& phi, const Biquaternion& potential, double charge,
                               const Biquaternion& mass_term, std::span<const Point4> points, double h);

/// Convergence order log2(r(h)/r(h/2)) of the finite-difference residual.
double residual_convergence_order(const WaveFunction& phi, const Biquaternion& potential, double charge,
                                  const Biquaternion& mass_term, std::span<const Point4> points, double h);

/// Energy and momentum of a free particle moving at speed v.
struct DeBroglie {
  double eta = 0.0;
  double mu = 0.0;
};

/// η = m/√(1-v²), μ = m·v/√(1-v²). Throws SuperluminalSpeed for |v| >= 1.
DeBroglie de_broglie(double mass, double v);

/// True when exp(-i·mass·2πR0l) = 1 to within tol, i.e. mass·R0l is an integer.
bool phase_single_valued(double mass, double R0l, double tol = 1e-9);

}  // namespace bqdirac
