#pragma once

#include <span>
#include <string>
#include <vector>

#include "bqdirac/spectrum.hpp"

namespace bqdirac {

// Local charge-density/potential relation at one spacetime point,
//   ρ²/(d·e²) - A³ρ - m²·d·A⁴ = 0,
// with the coupling coefficient d taken from the quantum numbers of the
// coupled interaction at that point. Planck's constant is h = 2π here.

inline constexpr double kPlanckNatural = 6.283185307179586;  // 2π

/// d = 3π/(n²h²). Throws InvalidQuantumNumber for n < 1.
double coefficient_d(int n);

/// d' = 3π/{h²(n_theta² + n_r² + 2 n_r √(n_theta² - α²))}. Throws SpeedDomain
/// unless 0 <= alpha < n_theta.
double coefficient_d_prime(QuantumNumbers qn, double alpha);

/// √(n_theta² - α²); callers add n_r to move from the Bohr to the coupled
/// interaction.
double replacement_map(int n_theta, double alpha);

/// Residual of the charge-density equation divided by its largest term.
double charge_density_residual(double rho, double A, double mass, double e, double d);

struct ChargeDensitySolution {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double A = 0.0;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
};

/// Both roots ρ± = (A²e²d'/2)(A ± √(A² + 4m²/e²)); the root prone to
/// cancellation is recovered from the product of roots. Throws ZeroCharge.
ChargeDensitySolution solve_rho(double A, double mass, double e, double d_prime);

/// Finite and carrying the sign of the charge convention.
bool physically_admissible(double rho, int charge_sign);

struct RhoSample {
  double A = 0.0;
  double mass = 0.0;
  double e = 1.0;
};

/// Largest relative residual over both branches of every sample. Parallel.
double rho_grid_max_residual(std::span<const RhoSample> samples, double d_prime);
double rho_grid_max_residual_serial(std::span<const RhoSample> samples, double d_prime);

std::string to_json(const ChargeDensitySolution& s, double mass, double e, double d_prime);

}  // namespace bqdirac
