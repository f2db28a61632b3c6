#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Core>

namespace angelesco {

namespace mp = boost::multiprecision;

/// Variable-precision real and complex types used by the engine.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Complex = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

template <typename Scalar>
using RealOf = typename Eigen::NumTraits<Scalar>::Real;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Requested number of significant decimal digits for a computation.
///
/// Values are carried with a few guard digits beyond `digits`; `epsilon()`
/// is the unit roundoff the rest of the engine budgets against.
struct PrecisionContext {
  int digits = 50;

  static constexpr int kMinDigits = 15;
  static constexpr int kGuardDigits = 12;

  int working_digits() const { return digits + kGuardDigits; }

  template <typename R = Real>
  R epsilon() const {
    using std::pow;
    return pow(R(10), R(1 - digits));
  }

  /// Default agreement tolerance for cross-route checks: 10^(-digits/2).
  template <typename R = Real>
  R verify_tolerance() const {
    using std::pow;
    return pow(R(10), R(-(digits / 2)));
  }

  /// Root-finder convergence tolerance: 10^(-(digits-12)).
  template <typename R = Real>
  R root_tolerance() const {
    using std::pow;
    return pow(R(10), R(-(digits - 12)));
  }
};

/// Validates the digit request; throws std::invalid_argument below 15 digits.
PrecisionContext make_precision(int digits);

template <typename Scalar>
struct is_multiprecision : std::false_type {};
template <typename Backend, mp::expression_template_option ET>
struct is_multiprecision<mp::number<Backend, ET>> : std::true_type {};

/// Installs the context's working precision as the default for newly
/// constructed multiprecision values; restores the previous one on exit.
/// A no-op for builtin floating types.
template <typename Scalar = Complex>
class PrecisionGuard {
 public:
  explicit PrecisionGuard(const PrecisionContext& ctx) {
    if constexpr (is_multiprecision<Scalar>::value) {
      previous_ = Real::default_precision();
      Real::default_precision(static_cast<unsigned>(ctx.working_digits()));
    }
  }
  ~PrecisionGuard() {
    if constexpr (is_multiprecision<Scalar>::value) {
      Real::default_precision(previous_);
    }
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned previous_ = 0;
};

/// Decimal-string rendering used by every serializer.
std::string to_decimal(const Real& x, int digits);

}  // namespace angelesco
