#pragma once

#include <numeric>
#include <vector>

#include "angelesco/errors.hpp"
#include "angelesco/oracle.hpp"
#include "angelesco/params.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/report.hpp"

namespace angelesco {

/// First-order raising operator acting on polynomials in w.
///
/// Meixner kinds: Q(w) -> c/(c-1) [ (w + beta - 1) Q(w) - (w/c) Q(w-1) ].
/// Charlier:      Q(w) -> -a Q(w) + w Q(w-1).
/// Both raise the degree by one and keep monic inputs monic.
template <typename Scalar>
struct RaisingOp {
  Family family = Family::Meixner2Angelesco;
  Scalar beta;  // Meixner kinds
  Scalar c;     // Meixner kinds
  Scalar a;     // Charlier

  static RaisingOp meixner(Scalar beta, Scalar c) {
    return RaisingOp{Family::Meixner2Angelesco, std::move(beta), std::move(c), Scalar(0)};
  }
  static RaisingOp charlier(Scalar a) {
    return RaisingOp{Family::CharlierAngelesco, Scalar(0), Scalar(0), std::move(a)};
  }
};

template <typename Scalar>
PolyW<Scalar> apply_raising(const RaisingOp<Scalar>& op, const PolyW<Scalar>& p) {
  if (p.is_zero()) return p;
  const PolyW<Scalar> shifted = poly_shift_arg(p);
  PolyW<Scalar> out;
  if (op.family == Family::CharlierAngelesco) {
    out = poly_add(poly_scale(p, Scalar(-op.a)), poly_mul_w(shifted));
  } else {
    const Scalar factor = op.c / (op.c - Scalar(1));
    const PolyW<Scalar> first = poly_mul(PolyW<Scalar>{Scalar(op.beta - Scalar(1)), Scalar(1)}, p);
    const PolyW<Scalar> second = poly_scale(poly_mul_w(shifted), Scalar(Scalar(1) / op.c));
    out = poly_scale(poly_sub(first, second), factor);
  }
  if (p.leading() == Scalar(1) && !out.is_zero()) out.coeffs(out.coeffs.size() - 1) = Scalar(1);
  return out;
}

inline std::vector<int> default_ray_order(int r) {
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

/// P_n as a product of raising operators applied to 1, rays taken in
/// `order`. Meixner-II applies Psi^{beta_j+n_j}, ..., Psi^{beta_j+1} per
/// ray; Meixner-I walks the shared beta down from beta+|n|; Charlier applies
/// the a_j operator n_j times.
template <typename Scalar>
PolyW<Scalar> raising_cascade(const ModelParams<Scalar>& p, const MultiIndex& n,
                              const std::vector<int>& order) {
  PrecisionGuard<Scalar> guard(p.ctx);
  PolyW<Scalar> out = PolyW<Scalar>::constant(Scalar(1));
  Scalar shared_beta;
  if (p.family == Family::Meixner1Angelesco) shared_beta = p.ray_beta(0) + Scalar(total_degree(n));
  for (int ray : order) {
    for (int t = n.at(ray); t >= 1; --t) {
      switch (p.family) {
        case Family::Meixner2Angelesco:
          out = apply_raising(RaisingOp<Scalar>::meixner(p.ray_beta(ray) + Scalar(t), p.ray_c(ray)), out);
          break;
        case Family::Meixner1Angelesco:
          out = apply_raising(RaisingOp<Scalar>::meixner(shared_beta, p.ray_c(ray)), out);
          shared_beta -= Scalar(1);
          break;
        case Family::CharlierAngelesco:
          out = apply_raising(RaisingOp<Scalar>::charlier(p.ray_a(ray)), out);
          break;
      }
    }
  }
  return out;
}

template <typename Scalar>
PolyW<Scalar> raising_cascade(const ModelParams<Scalar>& p, const MultiIndex& n) {
  return raising_cascade(p, n, default_ray_order(p.r));
}

/// Meixner-II closed-form multi-sum
///   (c/(c-1))^|n| sum_k prod_m C(n_m,k_m) (-w)_|k| c^-|k|
///                       prod_m (w + beta_m - k_0 - ... - k_{m-1})_{n_m - k_m}.
template <typename Scalar>
PolyW<Scalar> explicit_series(const ModelParams<Scalar>& p, const MultiIndex& n) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  if (p.family != Family::Meixner2Angelesco) {
    throw std::invalid_argument("explicit_series is defined for Meixner-II only");
  }
  const int r = p.r;
  const Scalar c = p.ray_c(0);
  const Scalar inv_c = Scalar(1) / c;
  std::vector<int> k(r, 0);
  PolyW<Scalar> acc;
  while (true) {
    int total = 0;
    R weight(1);
    for (int m = 0; m < r; ++m) {
      weight *= binomial<R>(n[m], k[m]);
      total += k[m];
    }
    PolyW<Scalar> term = poly_scale(neg_rising_poly<Scalar>(total),
                                    Scalar(Scalar(weight) * power_int(inv_c, total)));
    int before = 0;
    for (int m = 0; m < r; ++m) {
      term = poly_mul(term, rising_poly(Scalar(p.ray_beta(m) - Scalar(before)), n[m] - k[m]));
      before += k[m];
    }
    acc = poly_add(acc, term);

    int m = r - 1;
    while (m >= 0 && k[m] == n[m]) k[m--] = 0;
    if (m < 0) break;
    ++k[m];
  }
  acc = poly_scale(acc, power_int(Scalar(c / (c - Scalar(1))), total_degree(n)));
  const R deviation = abs(acc.leading() - Scalar(1));
  if (acc.degree() != total_degree(n) || deviation > R(1e-5)) {
    throw MonicityError("explicit_series: leading coefficient deviates from 1 at " + to_string(n));
  }
  return make_monic(acc);
}

/// Values of P_n at w = 0..kmax from the nested backward-difference
/// (Rodrigues) formula.
///
/// The Gamma quotients reduce to finite products: with g the value scaled
/// by the base weight, each ray applies
///   g'(k) = sum_s C(n_j,s) (-1)^s k(k-1)..(k-s+1) F_j(k,s) g(k-s),
/// where F_j = c^-s (k+beta_j)_{n_j-s} (Meixner-II), c_j^-s / (k-s+beta)_s
/// (Meixner-I) or a_j^-s (Charlier). The falling factorial vanishes for
/// s > k, which encodes 1/Gamma = 0 left of the lattice.
template <typename Scalar>
std::vector<Scalar> rodrigues_grid_values(const ModelParams<Scalar>& p, const MultiIndex& n,
                                          long kmax) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  const int N = total_degree(n);
  if (kmax < N) throw std::invalid_argument("rodrigues_grid_values: kmax must be >= |n|");

  std::vector<Scalar> g(kmax + 1, Scalar(1));
  if (p.family == Family::Meixner1Angelesco) {
    for (long k = 0; k <= kmax; ++k) g[k] = pochhammer(Scalar(Scalar(k) + p.ray_beta(0)), N);
  }

  for (int j = 0; j < p.r; ++j) {
    const int nj = n[j];
    if (nj == 0) continue;
    std::vector<Scalar> next(kmax + 1, Scalar(0));
    for (long k = 0; k <= kmax; ++k) {
      Scalar acc(0);
      Scalar falling(1);
      for (int s = 0; s <= nj && s <= k; ++s) {
        if (s > 0) falling *= Scalar(k - s + 1);
        Scalar factor;
        switch (p.family) {
          case Family::Meixner2Angelesco:
            factor = power_int(Scalar(Scalar(1) / p.ray_c(j)), s) *
                     pochhammer(Scalar(Scalar(k) + p.ray_beta(j)), nj - s);
            break;
          case Family::Meixner1Angelesco: {
            const Scalar denom = pochhammer(Scalar(Scalar(k - s) + p.ray_beta(0)), s);
            if (denom == Scalar(0)) throw ParamDomainError("Rodrigues ladder hits a Gamma pole");
            factor = power_int(Scalar(Scalar(1) / p.ray_c(j)), s) / denom;
            break;
          }
          case Family::CharlierAngelesco:
            factor = power_int(Scalar(Scalar(1) / p.ray_a(j)), s);
            break;
        }
        const R sign = (s % 2 == 0) ? R(1) : R(-1);
        acc += Scalar(binomial<R>(nj, s) * sign) * falling * factor * g[k - s];
      }
      next[k] = acc;
    }
    g = std::move(next);
  }

  Scalar prefactor(1);
  for (int l = 0; l < p.r; ++l) {
    switch (p.family) {
      case Family::Meixner2Angelesco:
      case Family::Meixner1Angelesco: {
        const Scalar c = p.ray_c(l);
        prefactor *= power_int(Scalar(c / (c - Scalar(1))), n[l]);
        break;
      }
      case Family::CharlierAngelesco:
        prefactor *= power_int(Scalar(-p.ray_a(l)), n[l]);
        break;
    }
  }
  for (auto& v : g) v *= prefactor;
  return g;
}

/// Rodrigues grid values at 0..|n| interpolated back to coefficients.
template <typename Scalar>
PolyW<Scalar> rodrigues_polynomial(const ModelParams<Scalar>& p, const MultiIndex& n) {
  PrecisionGuard<Scalar> guard(p.ctx);
  const int N = total_degree(n);
  const auto values = rodrigues_grid_values(p, n, N);
  std::vector<std::pair<long, Scalar>> nodes;
  nodes.reserve(values.size());
  for (long k = 0; k <= N; ++k) nodes.emplace_back(k, values[k]);
  return newton_interpolate(nodes);
}

/// Classical single-ray forms:
///   Charlier  (-a)^n 2F0(-n, -x; ; -1/a),
///   Meixner   (c/(c-1))^n (beta)_n 2F1(-n, -x; beta; 1 - 1/c),
/// expanded into coefficients in w = x.
template <typename Scalar>
PolyW<Scalar> classical_hypergeometric(const ModelParams<Scalar>& p, int n) {
  PrecisionGuard<Scalar> guard(p.ctx);
  if (p.r != 1) throw std::invalid_argument("classical_hypergeometric requires r = 1");
  PolyW<Scalar> sum;
  Scalar term_coeff(1);  // (-n)_k z^k / (k! [(beta)_k])
  Scalar z;
  Scalar prefactor;
  if (p.family == Family::CharlierAngelesco) {
    z = Scalar(-1) / p.ray_a(0);
    prefactor = power_int(Scalar(-p.ray_a(0)), n);
  } else {
    const Scalar c = p.ray_c(0);
    z = Scalar(1) - Scalar(1) / c;
    prefactor = power_int(Scalar(c / (c - Scalar(1))), n) * pochhammer(p.ray_beta(0), n);
  }
  for (int k = 0; k <= n; ++k) {
    sum = poly_add(sum, poly_scale(neg_rising_poly<Scalar>(k), term_coeff));
    // advance to k+1
    term_coeff *= Scalar(k - n) * z / Scalar(k + 1);
    if (p.family != Family::CharlierAngelesco) term_coeff /= p.ray_beta(0) + Scalar(k);
  }
  return poly_scale(sum, prefactor);
}

/// Coefficient deviation of Psi^{beta_i} Psi^{beta_j} q from Psi^{beta_j} Psi^{beta_i} q.
template <typename Scalar>
RealOf<Scalar> psi_commutator(const Scalar& beta_i, const Scalar& beta_j, const Scalar& c,
                              const PolyW<Scalar>& q) {
  const auto Pi = RaisingOp<Scalar>::meixner(beta_i, c);
  const auto Pj = RaisingOp<Scalar>::meixner(beta_j, c);
  return relative_distance(apply_raising(Pi, apply_raising(Pj, q)),
                           apply_raising(Pj, apply_raising(Pi, q)));
}

/// Mixed-argument three-term relation
///   M^{beta - e_l}_{n + e_l}(w) = c/(c-1) [ (w + beta_l - 1) M^{beta}_n(w) - (w/c) M^{beta}_n(w-1) ],
/// both sides solved by the oracle from the given tables (`lowered` built
/// with beta_l - 1).
template <typename Scalar>
VerificationReport check_remark_identity(const ModelParams<Scalar>& p, const MultiIndex& n, int l,
                                         const RealOf<Scalar>& tol,
                                         const MomentTable<Scalar>& base_moments,
                                         const MomentTable<Scalar>& lowered_moments) {
  PrecisionGuard<Scalar> guard(p.ctx);
  ModelParams<Scalar> lowered = p;
  lowered.beta[l] -= Scalar(1);
  const PolyW<Scalar> lhs = solve_monic(lowered, unit_step(n, l), lowered_moments).poly;
  const PolyW<Scalar> base = solve_monic(p, n, base_moments).poly;
  const PolyW<Scalar> rhs = apply_raising(RaisingOp<Scalar>::meixner(p.ray_beta(l), p.ray_c(l)), base);
  VerificationReport report;
  report.add(make_check("mixed_argument_relation" + to_string(n) + "[l=" + std::to_string(l) + "]",
                        relative_distance(rhs, lhs), tol, "route oracle"));
  return report;
}

/// As above, building the moment tables. Falls back to the explicit series
/// on both sides when the lowered parameters leave the domain or an index
/// is not normal.
template <typename Scalar>
VerificationReport check_remark_identity(const ModelParams<Scalar>& p, const MultiIndex& n, int l,
                                         const RealOf<Scalar>& tol,
                                         const RealOf<Scalar>& tol_abs) {
  PrecisionGuard<Scalar> guard(p.ctx);
  const std::string name = "mixed_argument_relation" + to_string(n) + "[l=" + std::to_string(l) + "]";
  VerificationReport report;
  if (p.family != Family::Meixner2Angelesco) {
    report.add({name, 0, 0, Verdict::NotApplicable, "Meixner-II only"});
    return report;
  }
  ModelParams<Scalar> lowered = p;
  lowered.beta[l] -= Scalar(1);
  const MultiIndex raised = unit_step(n, l);
  try {
    validate(lowered);
    int jmax = 0;
    for (int v : raised) jmax = std::max(jmax, v);
    const int N = total_degree(raised);
    return check_remark_identity(p, n, l, tol, compute_moment_table(p, jmax, N, tol_abs),
                                 compute_moment_table(lowered, jmax, N, tol_abs));
  } catch (const ParamDomainError&) {
  } catch (const NotNormalError&) {
  }
  const PolyW<Scalar> lhs = explicit_series(lowered, raised);
  const PolyW<Scalar> rhs = apply_raising(RaisingOp<Scalar>::meixner(p.ray_beta(l), p.ray_c(l)),
                                          explicit_series(p, n));
  report.add(make_check(name, relative_distance(rhs, lhs), tol, "route series"));
  return report;
}

extern template PolyW<Complex> raising_cascade<Complex>(const ModelParams<Complex>&,
                                                        const MultiIndex&, const std::vector<int>&);
extern template PolyW<Complex> explicit_series<Complex>(const ModelParams<Complex>&,
                                                        const MultiIndex&);
extern template std::vector<Complex> rodrigues_grid_values<Complex>(const ModelParams<Complex>&,
                                                                    const MultiIndex&, long);

}  // namespace angelesco
