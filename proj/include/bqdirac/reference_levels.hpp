#pragma once

namespace bqdirac::reference {

/// Dirac-Coulomb bound-state energy E/m for principal number n and total
/// angular momentum j (half-integer), point nucleus, no recoil.
double dirac_coulomb_energy(int n, double j, double alpha);

/// E/m to fourth order in α: 1 - α²/(2n²) - α⁴/(2n⁴)·(n/k - 3/4), k = j + 1/2.
double sommerfeld_expansion(int n, int k, double alpha);

}  // namespace bqdirac::reference
