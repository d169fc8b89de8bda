#include "bqdirac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bqdirac {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // snprintf honours LC_NUMERIC; the tools never call setlocale, but guard anyway.
  std::string s(buf);
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

CaseResult make_case(std::string id, double max_error, double tolerance) {
  // NaN errors never pass.
  return {std::move(id), max_error, tolerance, max_error <= tolerance};
}

bool VerificationReport::overall() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string to_json(const VerificationReport& report) {
  std::string out = "{\"suite\":" + json_string(report.suite) + ",\"cases\":[";
  for (std::size_t k = 0; k < report.cases.size(); ++k) {
    const auto& c = report.cases[k];
    if (k) out += ',';
    out += "{\"id\":" + json_string(c.id) + ",\"max_error\":" + json_number(c.max_error) +
           ",\"tolerance\":" + json_number(c.tolerance) + ",\"pass\":" + (c.pass ? "true" : "false") + '}';
  }
  out += "],\"overall\":";
  out += report.overall() ? "true" : "false";
  out += "}\n";
  return out;
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "suite,id,max_error,tolerance,pass\n";
  for (const auto& c : report.cases) {
    out += report.suite + ',' + c.id + ',' + format_number(c.max_error) + ',' + format_number(c.tolerance) +
           ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace bqdirac
