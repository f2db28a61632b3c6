#include "angelesco/report.hpp"

#include <algorithm>

namespace angelesco {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
    case Verdict::NotApplicable: return "n/a";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.verdict == Verdict::Fail; });
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& w : other.warnings) {
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  }
}

}  // namespace angelesco
