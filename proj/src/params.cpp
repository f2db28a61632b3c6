#include "angelesco/params.hpp"

#include <algorithm>
#include <cctype>

namespace angelesco {

std::string to_string(Family f) {
  switch (f) {
    case Family::CharlierAngelesco: return "charlier";
    case Family::Meixner1Angelesco: return "meixner1";
    case Family::Meixner2Angelesco: return "meixner2";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "charlier") return Family::CharlierAngelesco;
  if (lower == "meixner1") return Family::Meixner1Angelesco;
  if (lower == "meixner2") return Family::Meixner2Angelesco;
  throw ParamDomainError("unknown family '" + name + "' (expected charlier, meixner1, meixner2)");
}

std::string to_string(const MultiIndex& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n[i]);
  }
  return s + ")";
}

}  // namespace angelesco
