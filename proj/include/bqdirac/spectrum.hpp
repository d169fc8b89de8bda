#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bqdirac {

// Bound states in natural units (hbar = c = 1, e² = α). Every tilde quantity
// is carried as its real value: speeds v with v~ = i·v, energies with
// η~ = -i·η, the rest-frame circle radius with R~ = i·R.

struct QuantumNumbers {
  int n_theta = 1;
  int n_r = 0;

  int principal() const { return n_theta + n_r; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Rest-frame temporal circle radius R0_l = n_theta/mass.
double circle_quantize(double mass, int n_theta);

/// Spatial-circle (Bohr) interaction.
struct BohrState {
  int n_theta = 1;
  double mass = 1.0;
  double v_b = 0.0;     ///< orbital speed α/n_theta
  double eta_b = 0.0;   ///< kinetic energy m/√(1-v²)
  double mu_b = 0.0;    ///< momentum m·v/√(1-v²)
  double eA_b = 0.0;    ///< potential energy -e²/R1_b
  double nu_b = 0.0;    ///< total energy η_b + eA_b
  double R1_b = 0.0;    ///< Bohr radius
  double R0_l = 0.0;    ///< rest-frame temporal circle radius
  double R0_b = 0.0;    ///< temporal circle radius seen from the nucleus frame
  double R1_hat = 0.0;  ///< spatial arc radius partnering R0_b; negative for v > 0
  double L = 0.0;       ///< angular momentum μ_b·R1_b
};

/// Throws SpeedDomain unless 0 <= alpha < n_theta, NonpositiveMass, or
/// InvalidQuantumNumber for n_theta < 1.
BohrState bohr_solve(double alpha, int n_theta, double mass);

/// Largest violation among mass·R0_l = n, ν_b·R0_b = n, η_b·R0_b + μ_b·R1_hat = n,
/// L = n and v_b = α/n, relative to n.
double quantization_defect(const BohrState& s, double alpha);

/// Bohr interaction plus one circle wave, carried by the heavy electron and
/// re-expressed for the coupling electron.
struct CoupledState {
  QuantumNumbers qn;
  BohrState bohr;
  double eta_l = 0.0;        ///< circle-wave energy n_r·m/n_theta
  double v_m = 0.0;          ///< coupling-electron speed
  double nu_m = 0.0;         ///< total energy via the geometric relation for v_m
  double nu_m_closed = 0.0;  ///< total energy via the closed form
  double mu_m = 0.0;         ///< coupling-electron momentum
  double vprime_m = 0.0;     ///< dashed total energy m²/μ_b + η_l/v_b
  double vprime_from_mu_m = 0.0;  ///< m²/μ_m; equals vprime_m
  double nu_h = 0.0;         ///< heavy-electron total energy ν_b + η_l
  double eta_h = 0.0;
  double mu_h = 0.0;
  double m_h = 0.0;
};

CoupledState coupled_solve(double alpha, QuantumNumbers qn, double mass);

/// mass·{1 + α²/(√(n_theta² - α²) + n_r)²}^(-1/2)
double coupled_energy_closed_form(double alpha, QuantumNumbers qn, double mass);

struct SpectrumLine {
  QuantumNumbers qn;
  double energy_natural = 0.0;  ///< ν_m/mass
  double energy_ev = 0.0;
  double binding_ev = 0.0;
  double reference_ev = 0.0;  ///< independent Dirac/Sommerfeld evaluation
  double abs_diff = 0.0;      ///< |energy_ev - reference_ev|

  friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

/// One line per (n_theta, n_r) in [1, max_n_theta] x [0, max_n_r], sorted by
/// (n_theta + n_r, n_theta). Rows are computed in parallel.
std::vector<SpectrumLine> spectrum_table(double alpha, double mass_ev, int max_n_theta, int max_n_r);

/// Serial reference for spectrum_table().
std::vector<SpectrumLine> spectrum_table_serial(double alpha, double mass_ev, int max_n_theta, int max_n_r);

std::string_view spectrum_csv_header();
std::string to_csv(const std::vector<SpectrumLine>& lines);
std::string to_json(const std::vector<SpectrumLine>& lines);

}  // namespace bqdirac
