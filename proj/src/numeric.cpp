#include "angelesco/numeric.hpp"

#include <ios>
#include <stdexcept>

#include "angelesco/poly.hpp"

namespace angelesco {

PrecisionContext make_precision(int digits) {
  if (digits < PrecisionContext::kMinDigits) {
    throw std::invalid_argument("precision must be at least " +
                                std::to_string(PrecisionContext::kMinDigits) + " digits");
  }
  return PrecisionContext{digits};
}

std::string to_decimal(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

const std::vector<mp::cpp_rational>& bernoulli_b2n_table() {
  // Tangent numbers by the Brent-Harvey integer recurrence, then
  // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
  static const std::vector<mp::cpp_rational> table = [] {
    constexpr int count = 160;
    std::vector<mp::cpp_int> t(count + 1);
    t[1] = 1;
    for (int k = 2; k <= count; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= count; ++k) {
      for (int j = k; j <= count; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    std::vector<mp::cpp_rational> out;
    out.reserve(count);
    for (int k = 1; k <= count; ++k) {
      const mp::cpp_int four_k = mp::cpp_int(1) << (2 * k);
      mp::cpp_rational b(mp::cpp_int(2 * k) * t[k], four_k * (four_k - 1));
      if (k % 2 == 0) b = -b;
      out.push_back(b);
    }
    return out;
  }();
  return table;
}

template Complex log_gamma<Complex>(const Complex&, const PrecisionContext&);
template std::vector<Complex> roots_of_unity<Complex>(int, const PrecisionContext&);
template PolyW<Complex> newton_interpolate<Complex>(const std::vector<std::pair<long, Complex>>&);

}  // namespace angelesco
