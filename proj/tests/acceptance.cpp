// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "bqdirac/circle_spaces.hpp"
#include "bqdirac/planewave.hpp"
#include "bqdirac/qed_decomposition.hpp"
#include "bqdirac/random.hpp"
#include "bqdirac/spectrum.hpp"
#include "bqdirac/tachyon.hpp"
#include "oracles.hpp"

using namespace bqdirac;

namespace {

constexpr double kAlpha = 1.0 / 137.0;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void spectrum_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int nt = 1; nt <= 5; ++nt) {
    for (int nr = 0; nr <= 5; ++nr) {
      const CoupledState c = coupled_solve(kAlpha, {nt, nr}, 1.0);
      const double ref = oracle::sommerfeld_energy(nt, nr, kAlpha);
      worst = std::max({worst, std::abs(c.nu_m - c.nu_m_closed) / c.nu_m_closed, std::abs(c.nu_m - ref) / ref,
                        std::abs(c.nu_m_closed - ref) / ref});
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "fine-structure spectrum, two routes and Sommerfeld oracle", worst <= 1e-12 && secs < 1.0,
         fmt("max rel err %.3g <= 1e-12, %.3g s < 1 s", worst, secs));
}

void ground_state_binding() {
  const double alpha = 7.2973525693e-3;
  const double mass_ev = 510998.9461;
  const auto lines = spectrum_table(alpha, mass_ev, 1, 0);
  const double a2 = alpha * alpha;
  const double expected = -a2 / (1.0 + std::sqrt(1.0 - a2)) * mass_ev;  // mass·(√(1-α²) - 1)
  const double err = std::abs(lines.at(0).binding_ev - expected);
  report(2, "ground-state binding energy", err <= 1e-6,
         fmt("binding %.10g eV, |diff| %.3g eV <= 1e-6", lines.at(0).binding_ev, err));
}

void fine_structure_splitting() {
  const double split = coupled_solve(kAlpha, {2, 0}, 1.0).nu_m - coupled_solve(kAlpha, {1, 1}, 1.0).nu_m;
  const double expected = std::pow(kAlpha, 4) / 32.0;
  const double rel = std::abs(split - expected) / expected;
  report(3, "n = 2 fine-structure splitting vs m*alpha^4/32", rel <= 0.01,
         fmt("splitting %.6g, rel dev %.3g <= 0.01", split, rel));
}

void n_r_zero_reduction() {
  double worst = 0.0;
  for (int nt = 1; nt <= 8; ++nt) {
    const CoupledState c = coupled_solve(kAlpha, {nt, 0}, 1.0);
    worst = std::max(worst, std::abs(c.nu_m - c.bohr.nu_b) / c.bohr.nu_b);
  }
  report(4, "coupled energy at n_r = 0 equals the Bohr total energy", worst <= 1e-13,
         fmt("max rel err %.3g <= %.0e", worst, 1e-13));
}

void tachyon_rotor() {
  Rng rng(42);
  const auto rotor = TachyonRotor::standard();
  double worst = 0.0;
  double twice = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Biquaternion x = rng.biquaternion();
    for (const auto kind : {SandwichKind::direct, SandwichKind::conjugate}) {
      worst = std::max(worst, max_abs_diff(tachyon_quaternion(x, rotor, kind), tachyon_componentwise(x, kind)));
      const Biquaternion y = tachyon_componentwise(tachyon_componentwise(x, kind), kind);
      twice = std::max(twice, max_abs_diff(y, Biquaternion(-x[0], -x[1], x[2], x[3])));
    }
    const ComplexFourVector z = unembed(x);
    const ComplexFourVector z2 = tachyon_fourvector(tachyon_fourvector(z));
    twice = std::max({twice, std::abs(z2.z0 + z.z0), std::abs(z2.z1 + z.z1), std::abs(z2.z2 - z.z2),
                      std::abs(z2.z3 - z.z3)});
  }
  report(5, "tachyonic rotor equals the componentwise map; double application is a pi rotation",
         worst <= 1e-14 && twice == 0.0, fmt("max err %.3g <= 1e-14, double-application err %.3g == 0", worst, twice));
}

void dirac_residual() {
  Rng rng(6);
  std::vector<Point4> pts(16);
  for (auto& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const PlaneWave bound{.nu = -0.3 + std::sqrt(1.0 + 0.25), .mu = 0.5, .mass = 1.0, .eA = -0.3};
  struct Case {
    WaveFunction w;
    Biquaternion A;
    double e;
  };
  const Case cases[] = {{free_solution(1.0), Biquaternion::zero(), 1.0},
                        {bound_solution(bound), plane_wave_potential(bound), plane_wave_charge(bound)}};
  double analytic = 0.0, fd = 0.0, order_dev = 0.0;
  for (const auto& c : cases) {
    const auto r = residual(c.w, c.A, c.e, scalar_mass_term(1.0), pts, 1e-5);
    analytic = std::max(analytic, r.analytic.value_or(INFINITY));
    fd = std::max(fd, r.fd);
    const double order = residual_convergence_order(c.w, c.A, c.e, scalar_mass_term(1.0), pts, 1e-2);
    order_dev = std::max(order_dev, std::abs(order - 2.0));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "analytic %.3g <= 1e-12, fd(h=1e-5) %.3g <= 1e-8, |order-2| %.3g <= 0.1", analytic,
                fd, order_dev);
  report(6, "free and bound plane waves solve the Dirac system", analytic <= 1e-12 && fd <= 1e-8 && order_dev <= 0.1,
         buf);
}

void quantization_web() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (const double alpha : {kAlpha, 0.3, 0.9 * n}) {
      worst = std::max(worst, quantization_defect(bohr_solve(alpha, n, 1.0), alpha));
    }
  }
  report(7, "Bohr quantization web", worst <= 1e-13, fmt("max rel defect %.3g <= %.0e", worst, 1e-13));
}

void qed_roots() {
  Rng rng(8);
  std::vector<RhoSample> grid(1000);
  for (auto& s : grid) {
    s.A = rng.uniform(-5, 5);
    s.mass = rng.uniform(0, 3);
    s.e = (rng.uniform(0, 1) < 0.5 ? -1 : 1) * rng.uniform(0.05, 2);
  }
  const double residual = rho_grid_max_residual(grid, coefficient_d_prime({2, 1}, kAlpha));
  bool positive = true, exact = true;
  double bracket = 0.0;
  for (int nt = 1; nt <= 10; ++nt) {
    exact = exact && coefficient_d_prime({nt, 0}, kAlpha) == coefficient_d(nt);
    for (int nr = 0; nr <= 10; ++nr) {
      positive = positive && coefficient_d_prime({nt, nr}, kAlpha) > 0.0;
      const double root = std::sqrt((nt - kAlpha) * (nt + kAlpha));
      const double lhs = (root + nr) * (root + nr) + kAlpha * kAlpha;
      const double rhs = static_cast<double>(nt * nt + nr * nr) + 2.0 * nr * root;
      bracket = std::max(bracket, std::abs(lhs - rhs) / rhs);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "max rel residual %.3g <= 1e-12, d'>0 %s, d'(n_r=0)==d %s, bracket %.3g <= 1e-14",
                residual, positive ? "yes" : "no", exact ? "yes" : "no", bracket);
  report(8, "charge-density roots", residual <= 1e-12 && positive && exact && bracket <= 1e-14, buf);
}

void chart_bijections() {
  Rng rng(9);
  const auto L = SpaceChart::minkowski();
  const SpaceChart charts[] = {SpaceChart::create(ChartKind::T, 1.1), SpaceChart::create(ChartKind::M, std::nullopt, 0.9),
                               SpaceChart::create(ChartKind::S, 1.1, 0.9)};
  double worst = 0.0;
  for (const auto& c : charts) {
    for (int k = 0; k < 1000; ++k) {
      const double x3 = (k % 2 ? 1 : -1) * rng.uniform(0.5, 3.0);
      const Point4 p{0.9 * std::abs(x3) * rng.uniform(-1, 1), rng.uniform(-3, 3), rng.uniform(-3, 3), x3};
      const Point4 q = chart_map(chart_map(p, L, c), c, L);
      for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(q[i] - p[i]));
    }
  }
  double basis = 0.0;
  for (int k = 0; k < 100; ++k) {
    basis = std::max(basis, anticommutation_defect(rotate_temporal_basis(rng.uniform(-2, 2))));
    basis = std::max(basis, anticommutation_defect(rotate_spatial_basis(rng.uniform(-3.2, 3.2))));
  }
  report(9, "chart round trips and rotated-basis anticommutation", worst <= 1e-12 && basis <= 1e-13,
         fmt("round-trip err %.3g <= 1e-12, basis defect %.3g <= 1e-13", worst, basis));
}

int run_to_file(const std::string& exe, const std::string& args, const std::string& path) {
  const std::string cmd = "\"" + exe + "\" " + args + " > \"" + path + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cli_determinism() {
  const std::string args = "verify --suite all --seed 42";
  const int a = run_to_file(BQDIRAC_CLI_PATH, args, "acceptance_run1.csv");
  const int b = run_to_file(BQDIRAC_CLI_PATH, args, "acceptance_run2.csv");
  const std::string ra = slurp("acceptance_run1.csv");
  const bool same = !ra.empty() && ra == slurp("acceptance_run2.csv");
  const int m = run_to_file(BQDIRAC_MUTANT_PATH, args, "acceptance_mutant.csv");
  for (const char* f : {"acceptance_run1.csv", "acceptance_run2.csv", "acceptance_mutant.csv"}) std::remove(f);
  char buf[200];
  std::snprintf(buf, sizeof buf, "exit codes %d/%d, byte-identical %s, mutant exit %d", a, b, same ? "yes" : "no", m);
  report(10, "verify --suite all --seed 42 is deterministic; sign-flip mutant exits 2",
         a == 0 && b == 0 && same && m == 2, buf);
}

}  // namespace

int main() {
  spectrum_agreement();
  ground_state_binding();
  fine_structure_splitting();
  n_r_zero_reduction();
  tachyon_rotor();
  dirac_residual();
  quantization_web();
  qed_roots();
  chart_bijections();
  cli_determinism();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
