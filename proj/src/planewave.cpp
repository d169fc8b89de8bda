#include "bqdirac/planewave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bqdirac/errors.hpp"

namespace bqdirac {

double PlaneWave::dispersion_defect() const {
  const double kinetic = nu - eA;
  return kinetic * kinetic - mass * mass - mu * mu;
}

CircleWave circle_wave(int n_r, double R0l) {
  if (n_r < 0) throw Error(ErrorKind::InvalidQuantumNumber, "n_r must be >= 0");
  if (!(R0l > 0.0)) throw Error(ErrorKind::NonpositiveRadiusParameter, "R0l must be positive");
  return {n_r, R0l, n_r / R0l};
}

namespace {

void require_positive_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    std::ostringstream msg;
    msg << "mass = " << mass << " must be positive";
    throw Error(ErrorKind::NonpositiveMass, msg.str());
  }
}

}  // namespace

Biquaternion scalar_mass_term(double mass) { return Biquaternion(-kI * mass); }

WaveFunction free_solution(double mass) {
  require_positive_mass(mass);
  return bound_solution(PlaneWave{.nu = mass, .mu = 0.0, .mass = mass, .eA = 0.0});
}

WaveFunction bound_solution(const PlaneWave& pw) { return bound_solution(pw, scalar_mass_term(pw.mass)); }

WaveFunction bound_solution(const PlaneWave& pw, const Biquaternion& mass_term) {
  require_positive_mass(pw.mass);
  const double defect = pw.dispersion_defect();
  if (!(std::abs(defect) <= kDispersionTol)) {
    std::ostringstream msg;
    msg << "(nu - eA)^2 - mass^2 - mu^2 = " << defect << " for nu = " << pw.nu << ", mu = " << pw.mu
        << ", mass = " << pw.mass << ", eA = " << pw.eA;
    throw Error(ErrorKind::DispersionViolation, msg.str());
  }
  const Complex n = norm_form(mass_term);
  const double m2 = pw.mass * pw.mass;
  if (std::abs(n + m2) > 1e-12 * std::max(1.0, m2)) {
    std::ostringstream msg;
    msg << "mass term has M~M~^conj = " << n << ", expected " << -m2;
    throw Error(ErrorKind::NonpositiveMass, msg.str());
  }
  return plane_wave_candidate(pw, mass_term);
}

WaveFunction plane_wave_candidate(const PlaneWave& pw, const Biquaternion& mass_term) {
  const double nu = pw.nu;
  const double mu = pw.mu;
  // φ2 = Q φ1 M~⁻¹ with Q = D‡-eigenvalue minus the potential energy.
  const Biquaternion q(pw.nu - pw.eA, -kI * pw.mu, 0.0, 0.0);
  const Biquaternion spinor = q * inverse(mass_term);

  auto phase = [nu, mu](const Point4& p) { return std::exp(kI * (-nu * p[0] + mu * p[1])); };

  WaveFunction w;
  w.phi1 = [phase](const Point4& p) { return Biquaternion(phase(p)); };
  w.phi2 = [phase, spinor](const Point4& p) { return spinor * phase(p); };
  w.grad1 = [phase, nu, mu](const Point4& p) {
    const Complex f = phase(p);
    return Gradient{Biquaternion(-kI * nu * f), Biquaternion(kI * mu * f), Biquaternion{}, Biquaternion{}};
  };
  w.grad2 = [phase, spinor, nu, mu](const Point4& p) {
    const Complex f = phase(p);
    return Gradient{spinor * (-kI * nu * f), spinor * (kI * mu * f), Biquaternion{}, Biquaternion{}};
  };
  return w;
}

Biquaternion plane_wave_potential(const PlaneWave& pw) {
  return embed(FourVector{pw.eA / pw.charge_sign, 0.0, 0.0, 0.0});
}

namespace {

struct PointResidual {
  double fd;
  double analytic;
};

PointResidual residual_at(const WaveFunction& phi, const DerivativeOperator& fd_op, const Biquaternion& potential,
                          double charge, const Biquaternion& mass_term, const Point4& p) {
  const DiagPair rhs = dirac_rhs(phi, mass_term, p);
  PointResidual r{magnitude(dirac_lhs(fd_op, potential, charge, phi, p) - rhs), 0.0};
  if (phi.has_analytic_gradient()) {
    r.analytic = magnitude(dirac_lhs_analytic(potential, charge, phi, p) - rhs);
  }
  return r;
}

}  // namespace

ResidualReport residual(const WaveFunction& phi, const Biquaternion& potential, double charge,
                        const Biquaternion& mass_term, std::span<const Point4> points, double h) {
  const DerivativeOperator fd_op = central_difference(h);
  const auto n = static_cast<long>(points.size());
  double fd = 0.0;
  double analytic = 0.0;
#pragma omp parallel for reduction(max : fd, analytic) schedule(static)
  for (long k = 0; k < n; ++k) {
    const PointResidual r = residual_at(phi, fd_op, potential, charge, mass_term, points[k]);
    fd = std::max(fd, r.fd);
    analytic = std::max(analytic, r.analytic);
  }
  ResidualReport report{fd, std::nullopt};
  if (phi.has_analytic_gradient()) report.analytic = analytic;
  return report;
}

ResidualReport residual_serial(const WaveFunction& phi, const Biquaternion& potential, double charge,
                               const Biquaternion& mass_term, std::span<const Point4> points, double h) {
  const DerivativeOperator fd_op = central_difference(h);
  ResidualReport report;
  double analytic = 0.0;
  for (const auto& p : points) {
    const PointResidual r = residual_at(phi, fd_op, potential, charge, mass_term, p);
    report.fd = std::max(report.fd, r.fd);
    analytic = std::max(analytic, r.analytic);
  }
  if (phi.has_analytic_gradient()) report.analytic = analytic;
  return report;
}

double residual_convergence_order(const WaveFunction& phi, const Biquaternion& potential, double charge,
                                  const Biquaternion& mass_term, std::span<const Point4> points, double h) {
  const double coarse = residual(phi, potential, charge, mass_term, points, h).fd;
  const double fine = residual(phi, potential, charge, mass_term, points, 0.5 * h).fd;
  return std::log2(coarse / fine);
}

DeBroglie de_broglie(double mass, double v) {
  require_positive_mass(mass);
  if (!(std::abs(v) < 1.0)) {
    std::ostringstream msg;
    msg << "|v| = " << std::abs(v) << " is not below the speed of light";
    throw Error(ErrorKind::SuperluminalSpeed, msg.str());
  }
  const double gamma = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
  return {mass * gamma, mass * v * gamma};
}

bool phase_single_valued(double mass, double R0l, double tol) {
  const Complex turn = std::exp(-kI * (mass * 2.0 * std::numbers::pi * R0l));
  return std::abs(turn - 1.0) <= tol;
}

}  // namespace bqdirac
