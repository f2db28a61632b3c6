#pragma once

#include <string>
#include <vector>

#include <Eigen/LU>

#include "angelesco/errors.hpp"
#include "angelesco/measures.hpp"
#include "angelesco/params.hpp"
#include "angelesco/poly.hpp"

namespace angelesco {

/// Pivot diagnostics of the square moment system (last column removed).
template <typename R>
struct NormalityCertificate {
  MultiIndex n;
  R min_pivot = 0;
  R max_pivot = 0;
  R cond_estimate = 0;  // max_pivot / min_pivot of the equilibrated system
  R threshold = 0;
  bool normal = true;
};

template <typename Scalar>
struct MonicSolution {
  PolyW<Scalar> poly;
  NormalityCertificate<RealOf<Scalar>> certificate;
};

/// Orthogonality condition (ray, order j) evaluated on a polynomial.
template <typename Scalar>
struct ResidualEntry {
  int ray = 0;
  int order = 0;
  Scalar value;
};

namespace detail {
inline void require_coverage(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range("moment table too small for " + what);
}
}  // namespace detail

/// Rows (ray l, order j < n_l), columns m = 0..|n|: the moment system.
template <typename Scalar>
MatrixX<Scalar> orthogonality_system(const MultiIndex& n, const MomentTable<Scalar>& moments) {
  const int N = total_degree(n);
  MatrixX<Scalar> system(N, N + 1);
  int row = 0;
  for (int l = 0; l < static_cast<int>(n.size()); ++l) {
    for (int j = 0; j < n[l]; ++j, ++row) {
      detail::require_coverage(moments.covers(j, N), "multi-index " + to_string(n));
      for (int m = 0; m <= N; ++m) system(row, m) = moments(l, j, m);
    }
  }
  return system;
}

/// Monic P_n from the moment system by complete-pivoting elimination on the
/// row- and column-equilibrated square block, with alpha_|n| = 1 moved to
/// the right-hand side. Throws NotNormalError when the smallest pivot is
/// below |n| * epsilon * 1e3.
template <typename Scalar>
MonicSolution<Scalar> solve_monic(const ModelParams<Scalar>& p, const MultiIndex& n,
                                  const MomentTable<Scalar>& moments) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  const int N = total_degree(n);
  MonicSolution<Scalar> out;
  out.certificate.n = n;
  if (N == 0) {
    out.poly = PolyW<Scalar>::constant(Scalar(1));
    out.certificate.min_pivot = out.certificate.max_pivot = out.certificate.cond_estimate = R(1);
    return out;
  }

  MatrixX<Scalar> system = orthogonality_system(n, moments);
  for (Eigen::Index i = 0; i < N; ++i) {
    R scale(0);
    for (Eigen::Index m = 0; m <= N; ++m) scale = std::max(scale, R(abs(system(i, m))));
    if (scale > 0) system.row(i) /= Scalar(scale);
  }
  VectorX<Scalar> col_scale(N);
  for (Eigen::Index m = 0; m < N; ++m) {
    R scale(0);
    for (Eigen::Index i = 0; i < N; ++i) scale = std::max(scale, R(abs(system(i, m))));
    col_scale(m) = scale > 0 ? Scalar(scale) : Scalar(1);
    system.col(m) /= col_scale(m);
  }

  const MatrixX<Scalar> square = system.leftCols(N);
  const VectorX<Scalar> rhs = -system.col(N);
  Eigen::FullPivLU<MatrixX<Scalar>> lu(square);
  lu.setThreshold(R(0));

  auto& cert = out.certificate;
  cert.min_pivot = R(abs(lu.matrixLU()(0, 0)));
  cert.max_pivot = cert.min_pivot;
  for (Eigen::Index i = 1; i < N; ++i) {
    const R piv = abs(lu.matrixLU()(i, i));
    cert.min_pivot = std::min(cert.min_pivot, piv);
    cert.max_pivot = std::max(cert.max_pivot, piv);
  }
  cert.threshold = R(N) * p.ctx.template epsilon<R>() * R(1000);
  cert.cond_estimate = cert.min_pivot > 0 ? R(cert.max_pivot / cert.min_pivot) : R(0);
  cert.normal = cert.min_pivot > cert.threshold;
  if (!cert.normal) {
    throw NotNormalError("multi-index " + to_string(n) + " is not normal (min pivot " +
                         to_decimal(Real(to_double(cert.min_pivot)), 6) + ")");
  }

  VectorX<Scalar> x = lu.solve(rhs);
  VectorX<Scalar> coeffs(N + 1);
  for (Eigen::Index m = 0; m < N; ++m) coeffs(m) = x(m) / col_scale(m);
  coeffs(N) = Scalar(1);
  out.poly = PolyW<Scalar>(std::move(coeffs));
  return out;
}

/// Orthogonality residuals sum_m alpha_m M[l](j, m) for every (l, j < n_l).
template <typename Scalar>
std::vector<ResidualEntry<Scalar>> residuals(const ModelParams<Scalar>& p, const MultiIndex& n,
                                             const PolyW<Scalar>& poly,
                                             const MomentTable<Scalar>& moments) {
  PrecisionGuard<Scalar> guard(p.ctx);
  std::vector<ResidualEntry<Scalar>> out;
  for (int l = 0; l < static_cast<int>(n.size()); ++l) {
    for (int j = 0; j < n[l]; ++j) {
      detail::require_coverage(moments.covers(j, poly.degree()), "residuals of " + to_string(n));
      Scalar acc(0);
      for (int m = 0; m <= poly.degree(); ++m) acc += poly[m] * moments(l, j, m);
      out.push_back({l, j, acc});
    }
  }
  return out;
}

/// max |residual|
template <typename Scalar>
RealOf<Scalar> max_residual(const std::vector<ResidualEntry<Scalar>>& entries) {
  using std::abs;
  RealOf<Scalar> worst(0);
  for (const auto& e : entries) worst = std::max(worst, RealOf<Scalar>(abs(e.value)));
  return worst;
}

/// b_{n,k} = alpha^{n}_{|n|-1} - alpha^{n+e_k}_{|n|}, with alpha^{0}_{-1} = 0.
template <typename Scalar>
Scalar oracle_b(const ModelParams<Scalar>& p, const MultiIndex& n, int k,
                const MomentTable<Scalar>& moments) {
  PrecisionGuard<Scalar> guard(p.ctx);
  const int N = total_degree(n);
  const PolyW<Scalar> pn = solve_monic(p, n, moments).poly;
  const PolyW<Scalar> next = solve_monic(p, unit_step(n, k), moments).poly;
  return pn[N - 1] - next[N];
}

/// d_{n,l} = sum_k k P_n(k) (-k)_{n_l-1} w_l(k) / sum_k P_{n-e_l}(k) (-k)_{n_l-1} w_l(k),
/// both sums expanded through the moment table.
template <typename Scalar>
Scalar oracle_d(const ModelParams<Scalar>& p, const MultiIndex& n, int l,
                const MomentTable<Scalar>& moments) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  if (n.at(l) < 1) throw std::invalid_argument("oracle_d: requires n_l >= 1");
  const int j = n[l] - 1;
  const PolyW<Scalar> pn = solve_monic(p, n, moments).poly;
  const PolyW<Scalar> prev = solve_monic(p, unit_step(n, l, -1), moments).poly;
  detail::require_coverage(moments.covers(j, pn.degree() + 1), "oracle_d at " + to_string(n));
  Scalar num(0);
  Scalar den(0);
  for (int m = 0; m <= pn.degree(); ++m) num += pn[m] * moments(l, j, m + 1);
  for (int m = 0; m <= prev.degree(); ++m) den += prev[m] * moments(l, j, m);
  const R scale = moments.max_norm() * std::max(R(1), max_abs_coeff(prev));
  if (abs(den) <= scale * p.ctx.template epsilon<R>() * R(1000)) {
    throw DivisionByNearZero("oracle_d: vanishing denominator at " + to_string(n));
  }
  return num / den;
}

extern template MonicSolution<Complex> solve_monic<Complex>(const ModelParams<Complex>&,
                                                            const MultiIndex&,
                                                            const MomentTable<Complex>&);

}  // namespace angelesco
