#include "bqdirac/qed_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bqdirac/errors.hpp"
#include "bqdirac/report.hpp"

namespace bqdirac {

namespace {

constexpr double kThreePi = 3.0 * std::numbers::pi;

void require_alpha_below(int n_theta, double alpha) {
  if (!(alpha >= 0.0 && alpha < n_theta)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " must lie in [0, n_theta = " << n_theta << ")";
    throw Error(ErrorKind::SpeedDomain, msg.str());
  }
}

}  // namespace

double coefficient_d(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidQuantumNumber, "n = " + std::to_string(n) + " must be >= 1");
  const double nn = static_cast<double>(n) * n;
  return kThreePi / (kPlanckNatural * kPlanckNatural * nn);
}

double replacement_map(int n_theta, double alpha) {
  if (n_theta < 1) throw Error(ErrorKind::InvalidQuantumNumber, "n_theta must be >= 1");
  require_alpha_below(n_theta, alpha);
  const double n = n_theta;
  return std::sqrt((n - alpha) * (n + alpha));
}

double coefficient_d_prime(QuantumNumbers qn, double alpha) {
  if (qn.n_r < 0) throw Error(ErrorKind::InvalidQuantumNumber, "n_r must be >= 0");
  const double root = replacement_map(qn.n_theta, alpha);
  const double nt = qn.n_theta;
  const double nr = qn.n_r;
  const double bracket = nt * nt + nr * nr + 2.0 * nr * root;
  return kThreePi / (kPlanckNatural * kPlanckNatural * bracket);
}

double charge_density_residual(double rho, double A, double mass, double e, double d) {
  const double t1 = rho * rho / (d * e * e);
  const double t2 = A * A * A * rho;
  const double t3 = mass * mass * d * A * A * A * A;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  if (scale == 0.0) return 0.0;
  return std::abs(t1 - t2 - t3) / scale;
}

ChargeDensitySolution solve_rho(double A, double mass, double e, double d_prime) {
  if (e == 0.0) throw Error(ErrorKind::ZeroCharge, "charge e must be nonzero");
  if (!(d_prime > 0.0)) throw Error(ErrorKind::InvalidQuantumNumber, "d' must be positive");

  const double k = 0.5 * A * A * e * e * d_prime;
  const double root = std::hypot(A, 2.0 * mass / e);  // √(A² + 4m²/e²) >= |A|
  const double product_term = -4.0 * mass * mass / (e * e);  // (A + root)(A - root)

  ChargeDensitySolution s;
  s.A = A;
  if (A >= 0.0) {
    s.rho_plus = k * (A + root);
    s.rho_minus = A + root > 0.0 ? k * product_term / (A + root) : 0.0;
  } else {
    s.rho_minus = k * (A - root);
    s.rho_plus = k * product_term / (A - root);
  }
  // a massless product term is -0.0; keep the printed root as 0
  s.rho_plus += 0.0;
  s.rho_minus += 0.0;
  s.residual_plus = charge_density_residual(s.rho_plus, A, mass, e, d_prime);
  s.residual_minus = charge_density_residual(s.rho_minus, A, mass, e, d_prime);
  return s;
}

bool physically_admissible(double rho, int charge_sign) { return std::isfinite(rho) && rho * charge_sign >= 0.0; }

namespace {

double sample_residual(const RhoSample& s, double d_prime) {
  const ChargeDensitySolution sol = solve_rho(s.A, s.mass, s.e, d_prime);
  return std::max(sol.residual_plus, sol.residual_minus);
}

}  // namespace

double rho_grid_max_residual(std::span<const RhoSample> samples, double d_prime) {
  const auto n = static_cast<long>(samples.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long k = 0; k < n; ++k) worst = std::max(worst, sample_residual(samples[k], d_prime));
  return worst;
}

double rho_grid_max_residual_serial(std::span<const RhoSample> samples, double d_prime) {
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, sample_residual(s, d_prime));
  return worst;
}

std::string to_json(const ChargeDensitySolution& s, double mass, double e, double d_prime) {
  return "{\"A\":" + json_number(s.A) + ",\"mass\":" + json_number(mass) + ",\"e\":" + json_number(e) +
         ",\"d_prime\":" + json_number(d_prime) + ",\"rho_plus\":" + json_number(s.rho_plus) +
         ",\"rho_minus\":" + json_number(s.rho_minus) + ",\"residual_plus\":" + json_number(s.residual_plus) +
         ",\"residual_minus\":" + json_number(s.residual_minus) + "}\n";
}

}  // namespace bqdirac
