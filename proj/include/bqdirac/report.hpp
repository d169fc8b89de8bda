#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bqdirac {

/// Locale-independent "%.17g". Non-finite values print as inf/-inf/nan.
std::string format_number(double x);

/// Like format_number but non-finite values become null, for JSON output.
std::string json_number(double x);

std::string json_string(std::string_view s);

/// One checked identity: largest observed error against its tolerance.
struct CaseResult {
  std::string id;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

CaseResult make_case(std::string id, double max_error, double tolerance);

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool overall() const;
};

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

}  // namespace bqdirac
