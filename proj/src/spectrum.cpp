#include "bqdirac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "bqdirac/errors.hpp"
#include "bqdirac/planewave.hpp"
#include "bqdirac/reference_levels.hpp"
#include "bqdirac/report.hpp"

namespace bqdirac {

namespace {

void require_positive_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    std::ostringstream msg;
    msg << "mass = " << mass << " must be positive";
    throw Error(ErrorKind::NonpositiveMass, msg.str());
  }
}

void require_n_theta(int n_theta) {
  if (n_theta < 1) {
    throw Error(ErrorKind::InvalidQuantumNumber, "n_theta = " + std::to_string(n_theta) + " must be >= 1");
  }
}

}  // namespace

double circle_quantize(double mass, int n_theta) {
  require_positive_mass(mass);
  require_n_theta(n_theta);
  return n_theta / mass;
}

BohrState bohr_solve(double alpha, int n_theta, double mass) {
  require_positive_mass(mass);
  require_n_theta(n_theta);
  if (!(alpha >= 0.0 && alpha < n_theta)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " must lie in [0, n_theta = " << n_theta << ")";
    throw Error(ErrorKind::SpeedDomain, msg.str());
  }
  const double n = n_theta;
  BohrState s;
  s.n_theta = n_theta;
  s.mass = mass;
  s.v_b = alpha / n;

  const auto [eta, mu] = de_broglie(mass, s.v_b);
  s.eta_b = eta;
  s.mu_b = mu;

  const double contraction = std::sqrt((1.0 - s.v_b) * (1.0 + s.v_b));  // √(1 - v²)
  // Bohr's second equation m·v·R1/√(1-v²) = n fixes the radius ...
  s.R1_b = s.v_b > 0.0 ? n * contraction / (mass * s.v_b) : std::numeric_limits<double>::infinity();
  // ... and the inverse-distance potential energy e²/R1 (e² = α) enters the total.
  s.eA_b = -alpha / s.R1_b;
  s.nu_b = s.eta_b + s.eA_b;
  s.L = s.v_b > 0.0 ? s.mu_b * s.R1_b : n;

  s.R0_l = circle_quantize(mass, n_theta);
  s.R0_b = s.R0_l / contraction;
  s.R1_hat = -s.v_b * s.R0_l / contraction;
  return s;
}

double quantization_defect(const BohrState& s, double alpha) {
  const double n = s.n_theta;
  const double checks[] = {
      s.mass * s.R0_l - n,
      s.nu_b * s.R0_b - n,
      s.eta_b * s.R0_b + s.mu_b * s.R1_hat - n,
      s.L - n,
      (s.v_b - alpha / n) * n,
  };
  double worst = 0.0;
  for (const double c : checks) worst = std::max(worst, std::abs(c) / n);
  return worst;
}

double coupled_energy_closed_form(double alpha, QuantumNumbers qn, double mass) {
  const double n = qn.n_theta;
  const double root = std::sqrt((n - alpha) * (n + alpha)) + qn.n_r;
  return mass / std::sqrt(1.0 + alpha * alpha / (root * root));
}

CoupledState coupled_solve(double alpha, QuantumNumbers qn, double mass) {
  if (qn.n_r < 0) {
    throw Error(ErrorKind::InvalidQuantumNumber, "n_r = " + std::to_string(qn.n_r) + " must be >= 0");
  }
  CoupledState c;
  c.qn = qn;
  c.bohr = bohr_solve(alpha, qn.n_theta, mass);
  const BohrState& b = c.bohr;
  const double n = qn.n_theta;

  c.eta_l = circle_wave(qn.n_r, b.R0_l).eta_l;

  // Geometric relation √(1-v_m²)/v_m = √(1-v_b²)/v_b + n_r/(n_theta·v_b),
  // inverted as v_m = 1/√(1 + K²).
  if (b.v_b > 0.0) {
    const double K = (std::sqrt((1.0 - b.v_b) * (1.0 + b.v_b)) + qn.n_r / n) / b.v_b;
    c.v_m = 1.0 / std::sqrt(1.0 + K * K);
  } else {
    c.v_m = 0.0;
  }
  const double contraction_m = std::sqrt((1.0 - c.v_m) * (1.0 + c.v_m));
  c.nu_m = mass * contraction_m;
  c.nu_m_closed = coupled_energy_closed_form(alpha, qn, mass);
  c.mu_m = mass * c.v_m / contraction_m;

  c.vprime_m = b.v_b > 0.0 ? mass * mass / b.mu_b + c.eta_l / b.v_b : std::numeric_limits<double>::infinity();
  c.vprime_from_mu_m = c.mu_m > 0.0 ? mass * mass / c.mu_m : std::numeric_limits<double>::infinity();

  // Heavy electron along the Bohr world line, δs1/δs0 = v_b.
  c.nu_h = b.nu_b + c.eta_l;
  const double ds0 = 1.0;
  const double ds1 = b.v_b;
  const double interval = (ds0 - ds1) * (ds0 + ds1);
  c.eta_h = c.nu_h * ds0 * ds0 / interval;
  c.mu_h = c.nu_h * ds1 * ds0 / interval;
  c.m_h = c.nu_h * ds0 / std::sqrt(interval);
  return c;
}

namespace {

std::vector<QuantumNumbers> table_order(int max_n_theta, int max_n_r) {
  if (max_n_theta < 1) throw Error(ErrorKind::InvalidQuantumNumber, "max_n_theta must be >= 1");
  if (max_n_r < 0) throw Error(ErrorKind::InvalidQuantumNumber, "max_n_r must be >= 0");
  std::vector<QuantumNumbers> order;
  order.reserve(static_cast<std::size_t>(max_n_theta) * (max_n_r + 1));
  for (int nt = 1; nt <= max_n_theta; ++nt) {
    for (int nr = 0; nr <= max_n_r; ++nr) order.push_back({nt, nr});
  }
  std::sort(order.begin(), order.end(), [](const QuantumNumbers& a, const QuantumNumbers& b) {
    if (a.principal() != b.principal()) return a.principal() < b.principal();
    return a.n_theta < b.n_theta;
  });
  return order;
}

void require_mass_ev(double mass_ev) {
  if (!(mass_ev > 0.0) || !std::isfinite(mass_ev)) {
    throw Error(ErrorKind::NonpositiveMass, "mass_ev must be positive");
  }
}

SpectrumLine make_line(double alpha, double mass_ev, QuantumNumbers qn) {
  const CoupledState c = coupled_solve(alpha, qn, 1.0);
  SpectrumLine line;
  line.qn = qn;
  line.energy_natural = c.nu_m;
  line.energy_ev = c.nu_m * mass_ev;
  line.binding_ev = line.energy_ev - mass_ev;
  line.reference_ev = mass_ev * reference::dirac_coulomb_energy(qn.principal(), qn.n_theta - 0.5, alpha);
  line.abs_diff = std::abs(line.energy_ev - line.reference_ev);
  return line;
}

}  // namespace

std::vector<SpectrumLine> spectrum_table(double alpha, double mass_ev, int max_n_theta, int max_n_r) {
  require_mass_ev(mass_ev);
  const auto order = table_order(max_n_theta, max_n_r);
  std::vector<SpectrumLine> lines(order.size());
  std::exception_ptr failure;
  const auto count = static_cast<long>(order.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < count; ++k) {
    try {
      lines[k] = make_line(alpha, mass_ev, order[k]);
    } catch (...) {
#pragma omp critical(bqdirac_spectrum_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return lines;
}

std::vector<SpectrumLine> spectrum_table_serial(double alpha, double mass_ev, int max_n_theta, int max_n_r) {
  require_mass_ev(mass_ev);
  std::vector<SpectrumLine> lines;
  for (const auto& qn : table_order(max_n_theta, max_n_r)) lines.push_back(make_line(alpha, mass_ev, qn));
  return lines;
}

std::string_view spectrum_csv_header() {
  return "n_theta,n_r,n,energy_natural,energy_ev,binding_ev,reference_ev,abs_diff";
}

std::string to_csv(const std::vector<SpectrumLine>& lines) {
  std::string out(spectrum_csv_header());
  out += '\n';
  for (const auto& l : lines) {
    out += std::to_string(l.qn.n_theta) + ',' + std::to_string(l.qn.n_r) + ',' + std::to_string(l.qn.principal()) +
           ',' + format_number(l.energy_natural) + ',' + format_number(l.energy_ev) + ',' +
           format_number(l.binding_ev) + ',' + format_number(l.reference_ev) + ',' + format_number(l.abs_diff) +
           '\n';
  }
  return out;
}

std::string to_json(const std::vector<SpectrumLine>& lines) {
  std::string out = "[";
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (k) out += ',';
    out += "{\"n_theta\":" + std::to_string(l.qn.n_theta) + ",\"n_r\":" + std::to_string(l.qn.n_r) +
           ",\"n\":" + std::to_string(l.qn.principal()) + ",\"energy_natural\":" + json_number(l.energy_natural) +
           ",\"energy_ev\":" + json_number(l.energy_ev) + ",\"binding_ev\":" + json_number(l.binding_ev) +
           ",\"reference_ev\":" + json_number(l.reference_ev) + ",\"abs_diff\":" + json_number(l.abs_diff) + '}';
  }
  out += "]\n";
  return out;
}

}  // namespace bqdirac
