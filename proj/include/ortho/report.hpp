#ifndef ORTHO_REPORT_HPP
#define ORTHO_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace ortho {

/// One verification outcome. The invariant passed == (|measured-expected| <=
/// tolerance) is established at construction; one-sided checks are expressed
/// as shortfalls against an expected value of zero.
struct VerificationReport {
  std::string check;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string method;  // monte_carlo | quadrature | series | finite_difference
};

inline VerificationReport make_report(std::string check, double measured,
                                      double expected, double tolerance,
                                      std::string method) {
  VerificationReport r;
  r.check = std::move(check);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = tolerance;
  r.passed = std::isfinite(measured) &&
             std::abs(measured - expected) <= tolerance;
  r.method = std::move(method);
  return r;
}

/// Shortest-17-significant-digit formatting used everywhere numbers are
/// emitted, so repeated runs produce byte-identical files.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string to_json_line(const VerificationReport& r) {
  std::string s = "{\"check\":\"" + r.check + "\"";
  s += ",\"measured\":" + format_g17(r.measured);
  s += ",\"expected\":" + format_g17(r.expected);
  s += ",\"tol\":" + format_g17(r.tolerance);
  s += std::string(",\"passed\":") + (r.passed ? "true" : "false");
  s += ",\"method\":\"" + r.method + "\"}";
  return s;
}

inline int count_failures(const std::vector<VerificationReport>& reports) {
  int n = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++n;
  }
  return n;
}

}  // namespace ortho

#endif  // ORTHO_REPORT_HPP
