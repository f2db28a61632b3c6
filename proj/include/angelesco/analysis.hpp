#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "angelesco/constructors.hpp"
#include "angelesco/measures.hpp"
#include "angelesco/oracle.hpp"
#include "angelesco/params.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/recurrence.hpp"
#include "angelesco/report.hpp"

namespace angelesco {

/// One fan-out root z on the star with z^r = w_roots[root].
template <typename Scalar>
struct StarRoot {
  int root = 0;
  int ray_index = 0;
  Scalar z;
};

template <typename Scalar>
struct ZeroSet {
  using R = RealOf<Scalar>;
  std::vector<Scalar> w_roots;
  std::vector<R> residuals;  // |p(w_root)|
  std::vector<StarRoot<Scalar>> z_roots;
  R max_residual = 0;
  R min_pair_separation = 0;  // over w-roots; 0 for degree 1
  int iterations = 0;
};

/// r-th roots |w|^{1/r} exp(i (arg w + 2 pi j)/r), j = 0..r-1.
template <typename Scalar>
std::vector<StarRoot<Scalar>> fan_out(const std::vector<Scalar>& w_roots, int r,
                                      const PrecisionContext& ctx) {
  using R = RealOf<Scalar>;
  using std::abs;
  using std::arg;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  const R two_pi = 2 * pi_of<R>();
  std::vector<StarRoot<Scalar>> out;
  for (std::size_t i = 0; i < w_roots.size(); ++i) {
    const R mod = abs(w_roots[i]);
    const R radius = mod == 0 ? R(0) : R(exp(log(mod) / R(r)));
    const R theta = arg(w_roots[i]);
    for (int j = 0; j < r; ++j) {
      const R phi = (theta + two_pi * R(j)) / R(r);
      out.push_back({static_cast<int>(i), j, Scalar(radius * cos(phi), radius * sin(phi))});
    }
  }
  (void)ctx;
  return out;
}

/// Aberth-Ehrlich simultaneous iteration in w. Starts on the circle of
/// radius 1 + max|alpha_m / alpha_d|; stops when every update is below
/// tol_root (1 + |w|). Throws ConvergenceError after 500 sweeps.
template <typename Scalar>
ZeroSet<Scalar> find_roots(const PolyW<Scalar>& p, int r, const PrecisionContext& ctx) {
  PrecisionGuard<Scalar> guard(ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  using std::cos;
  using std::sin;
  constexpr int kMaxIter = 500;
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

  const PolyW<Scalar> q = make_monic(p);
  PolyW<Scalar> dq;
  {
    VectorX<Scalar> c(d);
    for (int m = 1; m <= d; ++m) c(m - 1) = q[m] * Scalar(m);
    dq = PolyW<Scalar>(std::move(c));
  }
  R radius(1);
  for (int m = 0; m < d; ++m) radius = std::max(radius, R(1 + abs(q[m])));
  const R tol = ctx.template root_tolerance<R>();
  const R two_pi = 2 * pi_of<R>();

  std::vector<Scalar> z(d);
  for (int j = 0; j < d; ++j) {
    const R phi = two_pi * R(j) / R(d) + R(0.4);
    z[j] = Scalar(radius * cos(phi), radius * sin(phi));
  }

  ZeroSet<Scalar> out;
  bool converged = false;
  for (int iter = 1; iter <= kMaxIter && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      const Scalar val = poly_eval(q, z[i]);
      if (val == Scalar(0)) continue;
      const Scalar ratio = val / poly_eval(dq, z[i]);
      Scalar sum(0);
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += Scalar(1) / (z[i] - z[j]);
      }
      const Scalar delta = ratio / (Scalar(1) - ratio * sum);
      z[i] -= delta;
      if (abs(delta) > tol * (1 + abs(z[i]))) converged = false;
    }
    out.iterations = iter;
  }
  if (!converged) {
    R worst(0);
    for (const auto& zi : z) worst = std::max(worst, R(abs(poly_eval(q, zi))));
    throw ConvergenceError("root finder did not converge in 500 iterations (best residual " +
                           to_decimal(Real(to_double(worst)), 6) + ")");
  }

  // A final Newton polish in working precision.
  for (auto& zi : z) {
    const Scalar dv = poly_eval(dq, zi);
    if (dv != Scalar(0)) zi -= poly_eval(q, zi) / dv;
  }
  std::sort(z.begin(), z.end(), [](const Scalar& a, const Scalar& b) {
    using std::real;
    using std::imag;
    return real(a) < real(b) || (real(a) == real(b) && imag(a) < imag(b));
  });

  const R lead = abs(p.leading());
  out.w_roots = z;
  for (const auto& zi : z) {
    const R res = abs(poly_eval(q, zi)) * lead;
    out.residuals.push_back(res);
    out.max_residual = std::max(out.max_residual, res);
  }
  if (d >= 2) {
    out.min_pair_separation = abs(z[0] - z[1]);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) out.min_pair_separation = std::min(out.min_pair_separation, R(abs(z[i] - z[j])));
  }
  out.z_roots = fan_out(z, r, ctx);
  return out;
}

/// Zero location for the diagonal index (n, ..., n). Hard checks for real
/// classical parameters; otherwise the deviation from (0, inf) is reported.
template <typename Scalar>
VerificationReport zero_location_check(const ModelParams<Scalar>& p, int n) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  using std::imag;
  using std::real;
  VerificationReport report;
  const std::string tag = "[n=" + std::to_string(n) + "]";
  if (n < 1) {
    report.add({"zero_location" + tag, 0, 0, Verdict::NotApplicable, "degree 0"});
    return report;
  }
  const MultiIndex idx(p.r, n);
  const PolyW<Scalar> poly = raising_cascade(p, idx);
  const ZeroSet<Scalar> zs = find_roots(poly, p.r, p.ctx);
  const R tol_root = p.ctx.template root_tolerance<R>();

  R off_axis(0);
  R below_zero(0);
  for (const auto& w : zs.w_roots) {
    off_axis = std::max(off_axis, R(abs(imag(w)) / (1 + abs(w))));
    below_zero = std::max(below_zero, R(-real(w)));
  }
  R rotation(0);
  const auto omega = roots_of_unity<Scalar>(p.r, p.ctx);
  for (const auto& s : zs.z_roots) {
    const Scalar rotated = omega[1 % p.r] * s.z;
    R best = -1;
    for (const auto& t : zs.z_roots) {
      const R dist = abs(rotated - t.z) / (1 + abs(t.z));
      if (best < 0 || dist < best) best = dist;
    }
    rotation = std::max(rotation, best);
  }

  const R scale = std::max(R(1), max_abs_coeff(poly));
  if (has_classical_real_params(p)) {
    report.add(make_check("zero_real" + tag, off_axis, tol_root));
    report.add(make_check("zero_positive" + tag, below_zero, tol_root));
    if (zs.w_roots.size() >= 2) {
      const R sep = zs.min_pair_separation;
      CheckResult c = make_check("zero_simple" + tag, R(10 * tol_root), sep,
                                 "min separation " + to_decimal(Real(to_double(sep)), 6));
      report.add(c);
    }
    report.add(make_check("zero_star_symmetry" + tag, rotation, R(10 * tol_root)));
    report.add(make_check("zero_residual" + tag, zs.max_residual, R(tol_root * scale)));
  } else {
    report.add({"zero_offset_from_axis" + tag, to_double(off_axis), 0, Verdict::Info,
                "complex parameters: measured, not asserted; min Re w deficit " +
                    to_decimal(Real(to_double(below_zero)), 6)});
    report.add(make_check("zero_star_symmetry" + tag, rotation, R(10 * tol_root)));
    report.add(make_check("zero_residual" + tag, zs.max_residual, R(tol_root * scale)));
  }
  return report;
}

/// Options for full_verify.
template <typename R>
struct VerifyOptions {
  R tolerance;          // relative agreement and orthogonality scale
  R tol_abs;            // moment-table tail
  int commutativity_samples = 20;
  int random_paths = 20;
  unsigned seed = 20240611u;
};

template <typename Scalar>
VerifyOptions<RealOf<Scalar>> default_verify_options(const ModelParams<Scalar>& p) {
  using R = RealOf<Scalar>;
  VerifyOptions<R> o;
  o.tolerance = p.ctx.template verify_tolerance<R>();
  o.tol_abs = p.ctx.template epsilon<R>() * R(10);
  return o;
}

namespace detail {

// Running maximum of one check across indices.
template <typename R>
struct Worst {
  R value = 0;
  std::string where;
  int failures = 0;
  int total = 0;
  int skipped = 0;

  void add(const R& v, const R& tol, const std::string& at) {
    ++total;
    if (v > tol) ++failures;
    if (v >= value) {
      value = v;
      where = at;
    }
  }
  CheckResult result(const std::string& name, const R& tol) const {
    if (total == 0) return {name, 0, 0, Verdict::NotApplicable, "no applicable indices"};
    std::string detail = "worst at " + where + ", failing " + std::to_string(failures) + " of " +
                         std::to_string(total);
    if (skipped) detail += ", " + std::to_string(skipped) + " non-normal skipped";
    return make_check(name, value, tol, detail);
  }
};

}  // namespace detail

/// Every cross-check over all |n| <= n_max, aggregated per check.
template <typename Scalar>
VerificationReport full_verify(const ModelParams<Scalar>& p, int n_max,
                               const VerifyOptions<RealOf<Scalar>>& opt) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  VerificationReport report;
  report.warnings = validate(p);
  const bool m2 = p.family == Family::Meixner2Angelesco;
  const R tol = opt.tolerance;

  auto moments = std::make_shared<const MomentTable<Scalar>>(
      compute_moment_table(p, n_max + 1, n_max + 2, opt.tol_abs));
  const R mnorm = moments->max_norm();
  OracleSource<Scalar> oracle(p, moments);
  auto recurrence_source = default_source(p, moments);

  detail::Worst<R> cascade_w, rodrigues_w, series_w, recurrence_w, order_w;
  detail::Worst<R> ortho_w, b_w, d_w, path_w, oracle_rec_w;
  for (const auto& n : indices_up_to(p.r, n_max)) {
    const std::string at = to_string(n);
    bool normal = true;
    PolyW<Scalar> ref;
    try {
      ref = oracle.monic(n);
    } catch (const NotNormalError&) {
      normal = false;
    }
    PolyW<Scalar> cascade = raising_cascade(p, n);
    if (!normal) {
      if (m2) {
        ref = explicit_series(p, n);
      } else {
        ref = cascade;
      }
      cascade_w.skipped++;
    }
    auto orth = [&](const PolyW<Scalar>& poly) {
      const R res = max_residual(residuals(p, n, poly, *moments));
      return R(res / (std::max(R(1), max_abs_coeff(poly)) * mnorm));
    };
    if (normal) {
      cascade_w.add(relative_distance(cascade, ref), tol, at);
      ortho_w.add(orth(ref), tol, at + " oracle");
    }
    std::vector<int> reversed(p.r);
    for (int l = 0; l < p.r; ++l) reversed[l] = p.r - 1 - l;
    order_w.add(relative_distance(raising_cascade(p, n, reversed), cascade), tol, at);
    rodrigues_w.add(relative_distance(rodrigues_polynomial(p, n), ref), tol, at);
    if (m2) series_w.add(relative_distance(explicit_series(p, n), ref), tol, at);

    PolyW<Scalar> rec;
    try {
      rec = generate(p, n, *recurrence_source);
      recurrence_w.add(relative_distance(rec, ref), tol, at);
      ortho_w.add(orth(rec), tol, at + " recurrence");
    } catch (const NotNormalError&) {
      recurrence_w.skipped++;
    } catch (const DivisionByNearZero&) {
      recurrence_w.skipped++;
    }
    ortho_w.add(orth(cascade), tol, at + " cascade");
    if (m2) {
      try {
        oracle_rec_w.add(relative_distance(generate(p, n, oracle), ref), tol, at);
      } catch (const std::runtime_error&) {
        oracle_rec_w.skipped++;
      }
    }

    // coefficient agreement, closed form vs oracle (Meixner-II)
    if (m2 && total_degree(n) < n_max && normal) {
      const auto closed = closed_form_coeffs(p, n);
      for (int l = 0; l < p.r; ++l) {
        try {
          const Scalar bo = oracle.b(n, l);
          b_w.add(R(abs(closed.b[l] - bo) / (1 + abs(bo))), tol, at + " l=" + std::to_string(l));
        } catch (const NotNormalError&) {
          b_w.skipped++;
        }
        if (n[l] < 1) continue;
        try {
          const Scalar dv = oracle.d(n, l);
          d_w.add(R(abs(closed.d[l] - dv) / (1 + abs(dv))), tol, at + " j=" + std::to_string(l));
        } catch (const std::runtime_error&) {
          d_w.skipped++;
        }
      }
    }

    // path independence with the family's coefficient source
    if (total_degree(n) >= 2) {
      std::vector<std::vector<int>> paths;
      if (p.r <= 2) {
        paths = enumerate_paths(n);
      } else {
        std::mt19937 rng(opt.seed + static_cast<unsigned>(total_degree(n)));
        for (int i = 0; i < opt.random_paths; ++i) paths.push_back(random_path(n, rng));
      }
      try {
        const PolyW<Scalar> first = generate(p, n, paths.front(), *recurrence_source);
        R dev(0);
        for (std::size_t i = 1; i < paths.size(); ++i) {
          dev = std::max(dev, relative_distance(generate(p, n, paths[i], *recurrence_source), first));
        }
        path_w.add(dev, tol, at);
      } catch (const NotNormalError&) {
        path_w.skipped++;
      } catch (const DivisionByNearZero&) {
        path_w.skipped++;
      }
    }
  }

  report.add(cascade_w.result("route_cascade_vs_oracle", tol));
  report.add(order_w.result("cascade_order_invariance", tol));
  report.add(rodrigues_w.result("route_rodrigues", tol));
  if (m2) {
    report.add(series_w.result("route_series", tol));
  } else {
    report.add({"route_series", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
  }
  report.add(recurrence_w.result("route_recurrence[" + recurrence_source->name() + "]", tol));
  if (m2) report.add(oracle_rec_w.result("route_recurrence[oracle]", tol));
  report.add(ortho_w.result("orthogonality", tol));
  if (m2) {
    report.add(b_w.result("coeff_b_closed_vs_oracle", tol));
    report.add(d_w.result("coeff_d_closed_vs_oracle", tol));
  } else {
    report.add({"coeff_closed_vs_oracle", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
  }
  report.add(path_w.result("path_independence[" + recurrence_source->name() + "]", tol));

  if (m2) {
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    R worst(0);
    for (int s = 0; s < opt.commutativity_samples; ++s) {
      const int i = s % p.r;
      const int j = (s / p.r + 1 + i) % p.r;
      VectorX<Scalar> c(7);
      for (int m = 0; m < 7; ++m) c(m) = Scalar(R(u(rng)), R(u(rng)));
      const Scalar bi = p.r > 1 ? p.ray_beta(i) : Scalar(p.ray_beta(0) + Scalar(R(u(rng))));
      const Scalar bj = p.r > 1 && i != j ? p.ray_beta(j) : Scalar(bi + Scalar(R(0.5) + R(u(rng))));
      worst = std::max(worst, psi_commutator(bi, bj, p.ray_c(0), PolyW<Scalar>(c)));
    }
    report.add(make_check("psi_commutativity", worst, tol,
                          std::to_string(opt.commutativity_samples) + " samples"));

    detail::Worst<R> remark_w;
    for (const auto& n : indices_up_to(p.r, n_max - 1)) {
      for (int l = 0; l < p.r; ++l) {
        const auto r = check_remark_identity(p, n, l, tol, opt.tol_abs);
        remark_w.add(R(r.checks.front().residual), tol, to_string(n) + " l=" + std::to_string(l));
      }
    }
    report.add(remark_w.result("mixed_argument_relation", tol));
    for (int l = 0; l < p.r; ++l) report.merge(single_ray_ladder_check(p, l, n_max, tol));
  } else {
    report.add({"psi_commutativity", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
    report.add({"mixed_argument_relation", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
    report.add({"single_ray_ladder", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
  }

  report.merge(check_pearson(p, 0, 40));
  {
    std::vector<Scalar> samples = {Scalar(R(0.5), R(0.25)), Scalar(R(2.25), R(-0.75)),
                                   Scalar(R(-1.5), R(1.0))};
    report.merge(omega_symmetry_check(p, samples));
  }
  for (int k = 1; k * p.r <= n_max; ++k) {
    try {
      report.merge(zero_location_check(p, k));
    } catch (const ConvergenceError& e) {
      report.add({"zero_location[n=" + std::to_string(k) + "]", 0, 0, Verdict::Fail, e.what()});
    }
  }
  return report;
}

template <typename Scalar>
VerificationReport full_verify(const ModelParams<Scalar>& p, int n_max) {
  return full_verify(p, n_max, default_verify_options(p));
}

}  // namespace angelesco
