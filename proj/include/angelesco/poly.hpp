#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "angelesco/errors.hpp"
#include "angelesco/numeric.hpp"
#include "angelesco/precision.hpp"

namespace angelesco {

/// Dense polynomial in the star variable w = z^r.
///
/// `coeffs[m]` multiplies w^m. Trailing exact zeros are trimmed by every
/// operation here, so the zero polynomial is the empty vector.
template <typename Scalar>
struct PolyW {
  VectorX<Scalar> coeffs;

  PolyW() = default;
  explicit PolyW(VectorX<Scalar> c) : coeffs(std::move(c)) { trim(); }
  PolyW(std::initializer_list<Scalar> c) : coeffs(static_cast<Eigen::Index>(c.size())) {
    Eigen::Index i = 0;
    for (const auto& v : c) coeffs(i++) = v;
    trim();
  }

  static PolyW constant(const Scalar& v) {
    VectorX<Scalar> c(1);
    c(0) = v;
    return PolyW(std::move(c));
  }

  /// w^m
  static PolyW monomial(int m) {
    VectorX<Scalar> c = VectorX<Scalar>::Zero(m + 1);
    c(m) = Scalar(1);
    return PolyW(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.size() == 0; }

  Scalar operator[](int m) const {
    return (m >= 0 && m < coeffs.size()) ? coeffs(m) : Scalar(0);
  }

  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs(coeffs.size() - 1); }

  void trim() {
    Eigen::Index n = coeffs.size();
    while (n > 0 && coeffs(n - 1) == Scalar(0)) --n;
    if (n != coeffs.size()) coeffs.conservativeResize(n);
  }
};

template <typename Scalar>
PolyW<Scalar> poly_add(const PolyW<Scalar>& p, const PolyW<Scalar>& q) {
  const Eigen::Index n = std::max(p.coeffs.size(), q.coeffs.size());
  VectorX<Scalar> out = VectorX<Scalar>::Zero(n);
  out.head(p.coeffs.size()) += p.coeffs;
  out.head(q.coeffs.size()) += q.coeffs;
  return PolyW<Scalar>(std::move(out));
}

template <typename Scalar>
PolyW<Scalar> poly_scale(const PolyW<Scalar>& p, const Scalar& a) {
  return PolyW<Scalar>(VectorX<Scalar>(p.coeffs * a));
}

template <typename Scalar>
PolyW<Scalar> poly_sub(const PolyW<Scalar>& p, const PolyW<Scalar>& q) {
  return poly_add(p, poly_scale(q, Scalar(-1)));
}

template <typename Scalar>
PolyW<Scalar> poly_mul(const PolyW<Scalar>& p, const PolyW<Scalar>& q) {
  if (p.is_zero() || q.is_zero()) return PolyW<Scalar>();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(p.coeffs.size() + q.coeffs.size() - 1);
  for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs(i) == Scalar(0)) continue;
    out.segment(i, q.coeffs.size()) += p.coeffs(i) * q.coeffs;
  }
  return PolyW<Scalar>(std::move(out));
}

/// w * p(w)
template <typename Scalar>
PolyW<Scalar> poly_mul_w(const PolyW<Scalar>& p) {
  if (p.is_zero()) return p;
  VectorX<Scalar> out(p.coeffs.size() + 1);
  out(0) = Scalar(0);
  out.tail(p.coeffs.size()) = p.coeffs;
  return PolyW<Scalar>(std::move(out));
}

template <typename Scalar>
PolyW<Scalar> operator+(const PolyW<Scalar>& p, const PolyW<Scalar>& q) { return poly_add(p, q); }
template <typename Scalar>
PolyW<Scalar> operator-(const PolyW<Scalar>& p, const PolyW<Scalar>& q) { return poly_sub(p, q); }
template <typename Scalar>
PolyW<Scalar> operator*(const PolyW<Scalar>& p, const PolyW<Scalar>& q) { return poly_mul(p, q); }
template <typename Scalar>
PolyW<Scalar> operator*(const Scalar& a, const PolyW<Scalar>& p) { return poly_scale(p, a); }
/// Exact coefficient equality.
template <typename Scalar>
bool operator==(const PolyW<Scalar>& p, const PolyW<Scalar>& q) {
  return p.coeffs.size() == q.coeffs.size() && (p.coeffs.size() == 0 || p.coeffs == q.coeffs);
}

namespace detail {
// q(w) = p(w + h) for integer h, by binomial expansion of (w + h)^m.
template <typename Scalar>
PolyW<Scalar> taylor_shift(const PolyW<Scalar>& p, int h) {
  using R = RealOf<Scalar>;
  const int n = p.degree();
  if (n < 0) return p;
  VectorX<Scalar> out = VectorX<Scalar>::Zero(n + 1);
  for (int m = 0; m <= n; ++m) {
    if (p.coeffs(m) == Scalar(0)) continue;
    R hpow(1);
    // term C(m, i) h^(m-i) w^i, walking i downward from m
    for (int i = m; i >= 0; --i) {
      out(i) += p.coeffs(m) * Scalar(binomial<R>(m, i) * hpow);
      hpow *= R(h);
    }
  }
  return PolyW<Scalar>(std::move(out));
}
}  // namespace detail

/// q(w) = p(w - 1).
template <typename Scalar>
PolyW<Scalar> poly_shift_arg(const PolyW<Scalar>& p) {
  return detail::taylor_shift(p, -1);
}

/// q(w) = p(w + 1).
template <typename Scalar>
PolyW<Scalar> poly_shift_inverse(const PolyW<Scalar>& p) {
  return detail::taylor_shift(p, 1);
}

/// Horner evaluation.
template <typename Scalar>
Scalar poly_eval(const PolyW<Scalar>& p, const Scalar& w) {
  Scalar acc(0);
  for (Eigen::Index m = p.coeffs.size() - 1; m >= 0; --m) acc = acc * w + p.coeffs(m);
  return acc;
}

/// Unique polynomial of degree < values.size() through the integer nodes,
/// built from divided differences and expanded from Newton form.
template <typename Scalar>
PolyW<Scalar> newton_interpolate(const std::vector<std::pair<long, Scalar>>& values) {
  std::set<long> seen;
  for (const auto& [node, value] : values) {
    if (!seen.insert(node).second) {
      throw DuplicateNodeError("newton_interpolate: duplicate node " + std::to_string(node));
    }
  }
  const std::size_t n = values.size();
  if (n == 0) return PolyW<Scalar>();
  std::vector<Scalar> dd;
  dd.reserve(n);
  for (const auto& v : values) dd.push_back(v.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const long span = values[i].first - values[i - level].first;
      dd[i] = (dd[i] - dd[i - 1]) / Scalar(span);
    }
  }
  PolyW<Scalar> p = PolyW<Scalar>::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    const PolyW<Scalar> factor{Scalar(-values[i].first), Scalar(1)};
    p = poly_add(poly_mul(p, factor), PolyW<Scalar>::constant(dd[i]));
  }
  return p;
}

/// (w + shift)_j as a polynomial in w.
template <typename Scalar>
PolyW<Scalar> rising_poly(const Scalar& shift, int j) {
  PolyW<Scalar> p = PolyW<Scalar>::constant(Scalar(1));
  for (int i = 0; i < j; ++i) p = poly_mul(p, PolyW<Scalar>{shift + Scalar(i), Scalar(1)});
  return p;
}

/// (-w)_j = (-w)(-w+1)...(-w+j-1).
template <typename Scalar>
PolyW<Scalar> neg_rising_poly(int j) {
  PolyW<Scalar> p = PolyW<Scalar>::constant(Scalar(1));
  for (int i = 0; i < j; ++i) p = poly_mul(p, PolyW<Scalar>{Scalar(i), Scalar(-1)});
  return p;
}

/// Divides by the leading coefficient and pins it to exactly 1.
template <typename Scalar>
PolyW<Scalar> make_monic(const PolyW<Scalar>& p) {
  if (p.is_zero()) return p;
  PolyW<Scalar> q = poly_scale(p, Scalar(1) / p.leading());
  q.coeffs(q.coeffs.size() - 1) = Scalar(1);
  return q;
}

template <typename Scalar>
RealOf<Scalar> max_abs_coeff(const PolyW<Scalar>& p) {
  using std::abs;
  RealOf<Scalar> m(0);
  for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) m = std::max(m, RealOf<Scalar>(abs(p.coeffs(i))));
  return m;
}

/// max_m |p_m - q_m|
template <typename Scalar>
RealOf<Scalar> coeff_distance(const PolyW<Scalar>& p, const PolyW<Scalar>& q) {
  return max_abs_coeff(poly_sub(p, q));
}

/// Coefficient distance scaled by max(1, max_m |reference_m|).
template <typename Scalar>
RealOf<Scalar> relative_distance(const PolyW<Scalar>& p, const PolyW<Scalar>& reference) {
  return coeff_distance(p, reference) / std::max(RealOf<Scalar>(1), max_abs_coeff(reference));
}

extern template PolyW<Complex> newton_interpolate<Complex>(const std::vector<std::pair<long, Complex>>&);

}  // namespace angelesco
