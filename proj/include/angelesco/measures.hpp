#pragma once

#include <optional>
#include <string>
#include <vector>

#include "angelesco/errors.hpp"
#include "angelesco/numeric.hpp"
#include "angelesco/params.hpp"
#include "angelesco/report.hpp"

namespace angelesco {

/// Lattice point z = k^{1/r} omega^ray on the star, with z^r = w = k.
template <typename Scalar>
struct MassPoint {
  int ray = 0;
  long k = 0;
  Scalar z;
  long w = 0;
};

template <typename Scalar>
MassPoint<Scalar> mass_point(int r, int ray, long k, const PrecisionContext& ctx) {
  PrecisionGuard<Scalar> guard(ctx);
  using R = RealOf<Scalar>;
  using std::exp;
  using std::log;
  const auto omega = roots_of_unity<Scalar>(r, ctx);
  const R radius = k == 0 ? R(0) : R(exp(log(R(k)) / R(r)));
  return MassPoint<Scalar>{ray, k, Scalar(radius) * omega.at(ray), k};
}

/// Weight of ray `ray` evaluated at complex star argument z (through z^r):
/// Gamma(z^r + beta_l) c_l^{z^r} / Gamma(z^r + 1) or a_l^{z^r} / Gamma(z^r + 1).
/// Powers use the principal logarithm.
template <typename Scalar>
Scalar weight_at_z(const ModelParams<Scalar>& p, int ray, const Scalar& z) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using std::exp;
  using std::log;
  const Scalar s = power_int(z, p.r);
  Scalar log_w;
  try {
    if (p.is_meixner()) {
      log_w = log_gamma(Scalar(s + p.ray_beta(ray)), p.ctx) + s * log(p.ray_c(ray)) -
              log_gamma(Scalar(s + Scalar(1)), p.ctx);
    } else {
      log_w = s * log(p.ray_a(ray)) - log_gamma(Scalar(s + Scalar(1)), p.ctx);
    }
  } catch (const PoleError& e) {
    throw ParamDomainError(std::string("weight hits a Gamma pole: ") + e.what());
  }
  return exp(log_w);
}

/// Weight on the integer lattice w = k of ray `ray`.
template <typename Scalar>
Scalar weight_at(const ModelParams<Scalar>& p, int ray, long k) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using std::exp;
  using std::log;
  const Scalar kk(k);
  Scalar log_w;
  try {
    if (p.is_meixner()) {
      log_w = log_gamma(Scalar(kk + p.ray_beta(ray)), p.ctx) + kk * log(p.ray_c(ray)) -
              log_gamma(Scalar(kk + Scalar(1)), p.ctx);
    } else {
      log_w = kk * log(p.ray_a(ray)) - log_gamma(Scalar(kk + Scalar(1)), p.ctx);
    }
  } catch (const PoleError& e) {
    throw ParamDomainError(std::string("weight hits a Gamma pole: ") + e.what());
  }
  return exp(log_w);
}

/// Mixed moments M[ray](j, m) = sum_k (-k)_j k^m w_ray(k).
template <typename Scalar>
struct MomentTable {
  using R = RealOf<Scalar>;

  int r = 0;
  int jmax = 0;
  int mmax = 0;
  std::vector<MatrixX<Scalar>> entries;  // per ray, (jmax+1) x (mmax+1)
  long truncation_K = 0;                 // terms k = 0 .. truncation_K - 1 (max over rays)
  R tail_bound = 0;
  R tol_abs = 0;

  const Scalar& operator()(int ray, int j, int m) const { return entries.at(ray)(j, m); }

  bool covers(int j, int m) const { return j <= jmax && m <= mmax; }

  R max_norm() const {
    using std::abs;
    R best(0);
    for (const auto& e : entries)
      for (Eigen::Index i = 0; i < e.size(); ++i) best = std::max(best, R(abs(e(i))));
    return best;
  }
};

namespace detail {

// Sums k = 0 .. K-1 for one ray; K = nullopt selects the certified stopping
// rule. Returns the number of terms used and the tail bound.
template <typename Scalar>
std::pair<long, RealOf<Scalar>> accumulate_ray(const ModelParams<Scalar>& p, int ray, int jmax,
                                               int mmax, const RealOf<Scalar>& tol_abs,
                                               std::optional<long> fixed_K,
                                               MatrixX<Scalar>& out) {
  using R = RealOf<Scalar>;
  using std::abs;
  using std::ceil;
  using std::exp;
  constexpr long kHardLimit = 1000000;
  constexpr int kSafety = 4;

  R max_beta(0);
  for (const auto& b : p.beta) max_beta = std::max(max_beta, R(abs(b)));
  const long k_min = 20 + jmax + mmax + static_cast<long>(to_double(R(ceil(max_beta))));

  out = MatrixX<Scalar>::Zero(jmax + 1, mmax + 1);
  MatrixX<Scalar> term = MatrixX<Scalar>::Zero(jmax + 1, mmax + 1);
  MatrixX<Scalar> previous = term;

  Scalar weight;
  if (p.is_meixner()) {
    try {
      weight = exp(log_gamma(p.ray_beta(ray), p.ctx));
    } catch (const PoleError& e) {
      throw ParamDomainError(std::string("moment weight hits a Gamma pole: ") + e.what());
    }
  } else {
    weight = Scalar(1);
  }

  for (long k = 0;; ++k) {
    if (fixed_K && k >= *fixed_K) return {k, R(0)};
    if (k >= kHardLimit) {
      throw ConvergenceError("moment series did not certify within " + std::to_string(kHardLimit) +
                             " terms");
    }
    // rows: (-k)_j w(k); columns multiply by k^m
    Scalar row(weight);
    for (int j = 0; j <= jmax; ++j) {
      Scalar v = row;
      for (int m = 0; m <= mmax; ++m) {
        term(j, m) = v;
        v *= Scalar(k);
      }
      row *= Scalar(j - k);
    }
    out += term;

    if (!fixed_K && k >= k_min) {
      R worst(0);
      bool geometric = true;
      for (Eigen::Index i = 0; i < term.size() && geometric; ++i) {
        const R t = abs(term(i));
        const R t_prev = abs(previous(i));
        if (t == 0) continue;
        if (t_prev == 0) { geometric = false; break; }
        const R q = t / t_prev;
        if (q >= 1) { geometric = false; break; }
        worst = std::max(worst, R(t * q / (1 - q) * kSafety));
      }
      if (geometric && worst <= tol_abs) return {k + 1, worst};
    }
    previous = term;

    if (p.is_meixner()) {
      weight *= p.ray_c(ray) * (Scalar(k) + p.ray_beta(ray)) / Scalar(k + 1);
    } else {
      weight *= p.ray_a(ray) / Scalar(k + 1);
    }
  }
}

}  // namespace detail

/// Mixed-moment table with certified absolute tail <= tol_abs.
///
/// Stops at the first K >= K_min where |term_K| q/(1-q) * 4 <= tol_abs for
/// every entry, with q the observed ratio of consecutive terms.
template <typename Scalar>
MomentTable<Scalar> compute_moment_table(const ModelParams<Scalar>& p, int jmax, int mmax,
                                         const RealOf<Scalar>& tol_abs) {
  PrecisionGuard<Scalar> guard(p.ctx);
  MomentTable<Scalar> t;
  t.r = p.r;
  t.jmax = jmax;
  t.mmax = mmax;
  t.tol_abs = tol_abs;
  t.entries.resize(p.r);
  for (int l = 0; l < p.r; ++l) {
    auto [K, tail] = detail::accumulate_ray(p, l, jmax, mmax, tol_abs, std::nullopt, t.entries[l]);
    t.truncation_K = std::max(t.truncation_K, K);
    t.tail_bound = std::max(t.tail_bound, tail);
  }
  return t;
}

/// Plain truncated sums over k = 0 .. K-1 on every ray (no certification).
template <typename Scalar>
MomentTable<Scalar> compute_moment_table_fixed(const ModelParams<Scalar>& p, int jmax, int mmax,
                                               long K) {
  PrecisionGuard<Scalar> guard(p.ctx);
  MomentTable<Scalar> t;
  t.r = p.r;
  t.jmax = jmax;
  t.mmax = mmax;
  t.truncation_K = K;
  t.entries.resize(p.r);
  for (int l = 0; l < p.r; ++l) {
    detail::accumulate_ray(p, l, jmax, mmax, RealOf<Scalar>(0), K, t.entries[l]);
  }
  return t;
}

/// Pearson equation Delta(sigma rho) = tau rho for the classical (r = 1)
/// weights: Charlier sigma = x, tau = a - x; Meixner sigma = x,
/// tau = (c-1) x + beta c.
template <typename Scalar>
VerificationReport check_pearson(const ModelParams<Scalar>& p, long x_from, long x_to) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  VerificationReport report;
  if (p.r != 1) {
    report.add({"pearson", 0, 0, Verdict::NotApplicable, "defined for a single ray"});
    return report;
  }
  R worst(0);
  for (long x = x_from; x <= x_to; ++x) {
    const Scalar rho = weight_at(p, 0, x);
    const Scalar rho_next = weight_at(p, 0, x + 1);
    const Scalar xs(x);
    Scalar tau;
    if (p.family == Family::CharlierAngelesco) {
      tau = p.ray_a(0) - xs;
    } else {
      const Scalar c = p.ray_c(0);
      tau = (c - Scalar(1)) * xs + p.ray_beta(0) * c;
    }
    const Scalar lhs = Scalar(x + 1) * rho_next - xs * rho;
    worst = std::max(worst, R(abs(lhs - tau * rho) / abs(rho)));
  }
  const R tol = p.ctx.template epsilon<R>() * 1000;
  report.add(make_check("pearson", worst, tol,
                        "x in [" + std::to_string(x_from) + ", " + std::to_string(x_to) + "]"));
  return report;
}

/// rho_j(omega^k z) == rho_j(z) for every ray weight, rotation and sample.
template <typename Scalar>
VerificationReport omega_symmetry_check(const ModelParams<Scalar>& p,
                                        const std::vector<Scalar>& samples) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  const auto omega = roots_of_unity<Scalar>(p.r, p.ctx);
  R worst(0);
  for (const auto& z : samples) {
    for (int j = 0; j < p.r; ++j) {
      const Scalar base = weight_at_z(p, j, z);
      for (int k = 1; k < p.r; ++k) {
        const Scalar rotated = weight_at_z(p, j, Scalar(omega[k] * z));
        worst = std::max(worst, R(abs(rotated - base) / abs(base)));
      }
    }
  }
  VerificationReport report;
  report.add(make_check("omega_symmetry", worst, R(p.ctx.template epsilon<R>() * 1000)));
  return report;
}

extern template MomentTable<Complex> compute_moment_table<Complex>(const ModelParams<Complex>&, int,
                                                                   int, const Real&);
extern template MomentTable<Complex> compute_moment_table_fixed<Complex>(const ModelParams<Complex>&,
                                                                         int, int, long);

}  // namespace angelesco
