#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bqdirac/report.hpp"

namespace bqdirac {

enum class Suite { algebra, charts, dirac, tachyon, spectrum, qed, all };

std::string_view to_string(Suite suite);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);

/// Runs one invariant suite with the given seed. `all` concatenates every
/// suite, prefixing case ids with the suite name. Deterministic given seed.
VerificationReport run_suite(Suite suite, std::uint64_t seed);

/// One plane-wave residual check, as reported by verify-dirac.
struct DiracCase {
  std::string name;
  double residual_fd = 0.0;
  double residual_analytic = 0.0;
  bool pass = false;
};

std::vector<DiracCase> dirac_cases(std::uint64_t seed);
std::string to_json(const std::vector<DiracCase>& cases);

/// One tachyon identity, as reported by verify-tachyon.
struct TachyonIdentity {
  std::string identity;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<TachyonIdentity> tachyon_identities(std::uint64_t seed);
std::string to_json(const std::vector<TachyonIdentity>& identities);

}  // namespace bqdirac
