#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "angelesco/errors.hpp"
#include "angelesco/precision.hpp"

namespace angelesco {

/// Exact Bernoulli numbers B_2, B_4, ..., B_{2*count}.
const std::vector<mp::cpp_rational>& bernoulli_b2n_table();

template <typename R>
R rational_to(const mp::cpp_rational& q) {
  if constexpr (is_multiprecision<R>::value) {
    return R(mp::numerator(q).str()) / R(mp::denominator(q).str());
  } else {
    return static_cast<R>(mp::numerator(q).template convert_to<long double>() /
                          mp::denominator(q).template convert_to<long double>());
  }
}

template <typename R>
R pi_of() {
  using std::acos;
  return acos(R(-1));
}

/// Principal branch of log Gamma(z).
///
/// Shifts z by the functional equation until Re z >= max(30, digits/2),
/// then sums the Stirling series. The sum of principal logs of the shift
/// factors keeps the result continuous off the negative real axis.
template <typename Scalar>
Scalar log_gamma(const Scalar& z, const PrecisionContext& ctx) {
  PrecisionGuard<Scalar> guard(ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  using std::floor;
  using std::log;
  using std::real;

  const R eps = ctx.epsilon<R>();
  const R re = real(z);
  if (re <= R(0.5)) {
    const R nearest = floor(re + R(0.5));
    if (nearest <= 0 && abs(z - Scalar(nearest)) <= eps * (1 + abs(z))) {
      throw PoleError("log_gamma: argument is a nonpositive integer");
    }
  }

  const R threshold = R(std::max(30, ctx.digits / 2));
  Scalar s = z;
  Scalar shift_logs(0);
  while (real(s) < threshold) {
    shift_logs += log(s);
    s += Scalar(1);
  }

  const R half_log_2pi = log(2 * pi_of<R>()) / 2;
  Scalar result = (s - Scalar(R(0.5))) * log(s) - s + Scalar(half_log_2pi);

  const auto& bern = bernoulli_b2n_table();
  const Scalar inv = Scalar(1) / s;
  const Scalar inv2 = inv * inv;
  Scalar power = inv;
  using std::pow;
  const R stop = pow(R(10), R(-ctx.working_digits() - 2));
  R previous = abs(result);
  for (std::size_t k = 1; k <= bern.size(); ++k) {
    const R coeff = rational_to<R>(bern[k - 1]) / R((2 * k) * (2 * k - 1));
    const Scalar term = power * Scalar(coeff);
    const R size = abs(term);
    // asymptotic series: stop at the smallest term
    if (size > previous) break;
    result += term;
    if (size <= stop * abs(result)) break;
    previous = size;
    power *= inv2;
  }
  return result - shift_logs;
}

/// Rising factorial (x)_j = x (x+1) ... (x+j-1) by direct product.
/// base^e for e >= 0 by repeated squaring.
template <typename Scalar>
Scalar power_int(Scalar base, int e) {
  Scalar acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

template <typename Scalar>
Scalar pochhammer(const Scalar& x, int j) {
  Scalar p(1);
  for (int i = 0; i < j; ++i) p *= x + Scalar(i);
  return p;
}

template <typename R>
R binomial(int n, int k) {
  if (k < 0 || k > n) return R(0);
  R b(1);
  for (int i = 1; i <= k; ++i) {
    b *= R(n - k + i);
    b /= R(i);
  }
  return b;
}

/// [omega^0, ..., omega^{r-1}] with omega = exp(2 pi i / r); quarter turns
/// are returned exactly.
template <typename Scalar>
std::vector<Scalar> roots_of_unity(int r, const PrecisionContext& ctx) {
  PrecisionGuard<Scalar> guard(ctx);
  using R = RealOf<Scalar>;
  using std::cos;
  using std::sin;
  if (r < 1) throw std::invalid_argument("roots_of_unity: r must be >= 1");
  std::vector<Scalar> out;
  out.reserve(r);
  for (int j = 0; j < r; ++j) {
    if ((4 * j) % r == 0) {
      switch ((4 * j) / r) {
        case 0: out.emplace_back(R(1), R(0)); break;
        case 1: out.emplace_back(R(0), R(1)); break;
        case 2: out.emplace_back(R(-1), R(0)); break;
        default: out.emplace_back(R(0), R(-1)); break;
      }
      continue;
    }
    const R angle = 2 * pi_of<R>() * R(j) / R(r);
    out.emplace_back(cos(angle), sin(angle));
  }
  return out;
}

/// Principal power base^k computed as exp(k log base); base^0 = 1.
template <typename Scalar>
Scalar principal_pow(const Scalar& base, const Scalar& exponent) {
  using std::exp;
  using std::log;
  if (exponent == Scalar(0)) return Scalar(1);
  if (base == Scalar(0)) return Scalar(0);
  return exp(exponent * log(base));
}

extern template Complex log_gamma<Complex>(const Complex&, const PrecisionContext&);
extern template std::vector<Complex> roots_of_unity<Complex>(int, const PrecisionContext&);

}  // namespace angelesco
