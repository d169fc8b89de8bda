#include "bqdirac/reference_levels.hpp"

#include <cmath>

namespace bqdirac::reference {

double dirac_coulomb_energy(int n, double j, double alpha) {
  const double k = j + 0.5;
  // n - k + √(k² - α²) rewritten as n - δ to avoid cancellation.
  const double delta = alpha * alpha / (k + std::sqrt((k - alpha) * (k + alpha)));
  const double eps = alpha / (n - delta);
  return 1.0 / std::sqrt(1.0 + eps * eps);
}

double sommerfeld_expansion(int n, int k, double alpha) {
  const double a2 = alpha * alpha;
  const double n2 = static_cast<double>(n) * n;
  return 1.0 - a2 / (2.0 * n2) - a2 * a2 / (2.0 * n2 * n2) * (static_cast<double>(n) / k - 0.75);
}

}  // namespace bqdirac::reference
