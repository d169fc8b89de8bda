#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bqdirac/errors.hpp"
#include "bqdirac/qed_decomposition.hpp"
#include "bqdirac/random.hpp"

using namespace bqdirac;

namespace {

constexpr double kAlpha = 1.0 / 137.0;

// Roots of ρ² - (A³de²)ρ - m²d²e²A⁴ = 0 from the textbook formula in long double.
std::pair<long double, long double> naive_roots(double A, double m, double e, double d) {
  const long double b = static_cast<long double>(A) * A * A * d * e * e;
  const long double c = -static_cast<long double>(m) * m * d * d * e * e * A * A * A * A;
  const long double disc = std::sqrt(b * b - 4 * c);
  return {(b + disc) / 2, (b - disc) / 2};
}

}  // namespace

TEST_CASE("coefficient d and its coupled form") {
  const double h = 2 * std::numbers::pi;
  CHECK(coefficient_d(1) == doctest::Approx(3 * std::numbers::pi / (h * h)).epsilon(1e-15));
  CHECK(coefficient_d(2) == doctest::Approx(coefficient_d(1) / 4).epsilon(1e-15));
  for (int nt = 1; nt <= 10; ++nt) {
    CHECK(coefficient_d_prime({nt, 0}, kAlpha) == coefficient_d(nt));
    for (int nr = 0; nr <= 10; ++nr) {
      const double dp = coefficient_d_prime({nt, nr}, kAlpha);
      CHECK(dp > 0.0);
      CHECK(coefficient_d_prime({nt, nr}, 0.0) == coefficient_d(nt + nr));
      const double root = std::sqrt(static_cast<double>(nt) * nt - kAlpha * kAlpha);
      const double bracket = (root + nr) * (root + nr) + kAlpha * kAlpha;
      CHECK(3 * std::numbers::pi / (h * h * bracket) == doctest::Approx(dp).epsilon(1e-14));
    }
  }
}

TEST_CASE("replacement map") {
  CHECK(replacement_map(2, 0.0) == 2.0);
  CHECK(replacement_map(5, 3.0) == 4.0);
  CHECK_THROWS_AS(replacement_map(1, 1.0), Error);
  CHECK_THROWS_AS(coefficient_d_prime({1, -1}, kAlpha), Error);
}

TEST_CASE("roots against the textbook formula") {
  Rng rng(51);
  for (int k = 0; k < 500; ++k) {
    const double A = rng.uniform(-3, 3);
    const double m = rng.uniform(0, 2);
    const double e = rng.uniform(0.1, 2) * (k % 2 ? 1 : -1);
    const double d = coefficient_d_prime({1 + k % 3, k % 4}, kAlpha);
    const auto s = solve_rho(A, m, e, d);
    auto [hi, lo] = naive_roots(A, m, e, d);
    // the naive formula labels roots by the sign in front of the square root
    // of a discriminant with A³ pulled inside; match by ordering instead.
    const double big = std::max(s.rho_plus, s.rho_minus);
    const double small = std::min(s.rho_plus, s.rho_minus);
    const double scale = std::max(1.0, static_cast<double>(std::abs(hi)));
    CHECK(std::abs(big - static_cast<double>(hi)) <= 1e-12 * scale);
    CHECK(std::abs(small - static_cast<double>(lo)) <= 1e-12 * scale);
    CHECK(s.residual_plus <= 1e-12);
    CHECK(s.residual_minus <= 1e-12);
  }
}

TEST_CASE("branch labels follow A ± root") {
  const double d = coefficient_d(1);
  const auto s = solve_rho(2.0, 1.0, 1.0, d);
  const double k = 0.5 * 4.0 * d;
  CHECK(s.rho_plus == doctest::Approx(k * (2.0 + std::sqrt(8.0))).epsilon(1e-14));
  CHECK(s.rho_minus == doctest::Approx(k * (2.0 - std::sqrt(8.0))).epsilon(1e-13));
  CHECK(s.rho_plus >= s.rho_minus);
}

TEST_CASE("massless limit leaves one root at zero") {
  const auto s = solve_rho(1.5, 0.0, 0.7, coefficient_d(2));
  CHECK(s.rho_minus == 0.0);
  CHECK(s.rho_plus > 0.0);
  const auto z = solve_rho(0.0, 1.0, 1.0, coefficient_d(1));
  CHECK(z.rho_plus == 0.0);
  CHECK(z.rho_minus == 0.0);
}

TEST_CASE("tiny mass keeps the small root accurate") {
  // here A - root cancels catastrophically in the direct formula
  const double A = 1.0, m = 1e-9, e = 1.0, d = coefficient_d(1);
  const auto s = solve_rho(A, m, e, d);
  const double expected = -m * m * d * d * e * e * A * A * A * A / s.rho_plus;  // product of roots / ρ₊
  CHECK(s.rho_minus == doctest::Approx(expected).epsilon(1e-14));
  CHECK(s.residual_minus <= 1e-12);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(solve_rho(1.0, 1.0, 0.0, 1.0), Error);
  try {
    solve_rho(1.0, 1.0, 0.0, 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroCharge);
  }
  CHECK_THROWS_AS(solve_rho(1.0, 1.0, 1.0, 0.0), Error);
}

TEST_CASE("physical admissibility") {
  CHECK(physically_admissible(0.5, 1));
  CHECK_FALSE(physically_admissible(-0.5, 1));
  CHECK(physically_admissible(-0.5, -1));
  CHECK_FALSE(physically_admissible(std::nan(""), 1));
}

TEST_CASE("grid residual: parallel equals serial") {
  Rng rng(52);
  std::vector<RhoSample> grid(1000);
  for (auto& s : grid) s = {rng.uniform(-5, 5), rng.uniform(0, 3), rng.uniform(0.05, 2)};
  const double d = coefficient_d_prime({2, 3}, kAlpha);
  const double par = rho_grid_max_residual(grid, d);
  CHECK(par == rho_grid_max_residual_serial(grid, d));
  CHECK(par <= 1e-12);
}

TEST_CASE("JSON record") {
  const auto s = solve_rho(1.0, 0.0, 1.0, 0.5);
  CHECK(to_json(s, 0.0, 1.0, 0.5) ==
        "{\"A\":1,\"mass\":0,\"e\":1,\"d_prime\":0.5,\"rho_plus\":0.5,\"rho_minus\":0,\"residual_plus\":0,"
        "\"residual_minus\":0}\n");
}
