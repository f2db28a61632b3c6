#pragma once

#include <string>
#include <vector>

#include "angelesco/precision.hpp"

namespace angelesco {

enum class Verdict { Pass, Fail, Info, NotApplicable };

std::string to_string(Verdict v);

/// One named check. Residual and tolerance are stored in double; verdicts
/// are decided in working precision before the conversion.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Info;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  /// False iff some check failed; informational and n/a entries never fail.
  bool passed() const;
  std::size_t count(Verdict v) const;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const VerificationReport& other);
};

template <typename R>
double to_double(const R& x) {
  if constexpr (is_multiprecision<R>::value) {
    return x.template convert_to<double>();
  } else {
    return static_cast<double>(x);
  }
}

/// Pass/fail entry comparing residual <= tolerance in working precision.
template <typename R>
CheckResult make_check(std::string name, const R& residual, const R& tolerance,
                       std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.residual = to_double(residual);
  c.tolerance = to_double(tolerance);
  c.verdict = residual <= tolerance ? Verdict::Pass : Verdict::Fail;
  c.detail = std::move(detail);
  return c;
}

}  // namespace angelesco
