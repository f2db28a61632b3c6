#pragma once

#include <string>

#include <doctest.h>

#include "angelesco/precision.hpp"

namespace testing_support {

using angelesco::Complex;
using angelesco::Real;

inline angelesco::PrecisionContext ctx50() { return angelesco::make_precision(50); }

// Complex from decimal strings, parsed at the current default precision.
inline Complex C(const char* re, const char* im = "0") { return Complex(Real(re), Real(im)); }

inline Real err(const Complex& a, const Complex& b) {
  using std::abs;
  return Real(abs(a - b));
}

inline double d(const Real& x) { return x.convert_to<double>(); }

}  // namespace testing_support
