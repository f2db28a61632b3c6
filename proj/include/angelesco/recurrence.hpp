#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "angelesco/constructors.hpp"
#include "angelesco/errors.hpp"
#include "angelesco/oracle.hpp"
#include "angelesco/params.hpp"
#include "angelesco/poly.hpp"
#include "angelesco/report.hpp"

namespace angelesco {

/// Nearest-neighbour coefficients at n: b[l] for every ray, d[j] for every ray.
template <typename Scalar>
struct NNRCoefficients {
  MultiIndex n;
  std::vector<Scalar> b;
  std::vector<Scalar> d;
};

/// Meixner-II closed forms
///   b_{n,l} = (c (n_l + beta_l) + |n|) / (1 - c),
///   d_{n,j} = c n_j (beta_j + n_j - 1) / (c - 1)^2.
template <typename Scalar>
NNRCoefficients<Scalar> closed_form_coeffs(const ModelParams<Scalar>& p, const MultiIndex& n) {
  PrecisionGuard<Scalar> guard(p.ctx);
  if (p.family != Family::Meixner2Angelesco) {
    throw std::invalid_argument("closed_form_coeffs is defined for Meixner-II only");
  }
  const Scalar c = p.ray_c(0);
  const Scalar N(total_degree(n));
  NNRCoefficients<Scalar> out{n, {}, {}};
  for (int l = 0; l < p.r; ++l) {
    const Scalar nl(n[l]);
    out.b.push_back((c * (nl + p.ray_beta(l)) + N) / (Scalar(1) - c));
    out.d.push_back(c * nl * (p.ray_beta(l) + nl - Scalar(1)) /
                    ((c - Scalar(1)) * (c - Scalar(1))));
  }
  return out;
}

/// Source of recurrence coefficients for the lattice walk.
template <typename Scalar>
class CoefficientSource {
 public:
  virtual ~CoefficientSource() = default;
  virtual Scalar b(const MultiIndex& n, int ray) = 0;
  /// Only requested for n_ray >= 1.
  virtual Scalar d(const MultiIndex& n, int ray) = 0;
  virtual std::string name() const = 0;

  NNRCoefficients<Scalar> coefficients(const MultiIndex& n, int rays) {
    NNRCoefficients<Scalar> out{n, {}, {}};
    for (int l = 0; l < rays; ++l) {
      out.b.push_back(b(n, l));
      out.d.push_back(n[l] >= 1 ? d(n, l) : Scalar(0));
    }
    return out;
  }
};

template <typename Scalar>
class ClosedFormSource final : public CoefficientSource<Scalar> {
 public:
  explicit ClosedFormSource(ModelParams<Scalar> p) : p_(std::move(p)) {}
  Scalar b(const MultiIndex& n, int ray) override { return closed_form_coeffs(p_, n).b.at(ray); }
  Scalar d(const MultiIndex& n, int ray) override { return closed_form_coeffs(p_, n).d.at(ray); }
  std::string name() const override { return "closed-form"; }

 private:
  ModelParams<Scalar> p_;
};

/// Coefficients extracted from oracle solutions (b from subleading
/// coefficients, d from the moment-sum ratio). Monic solutions are cached.
template <typename Scalar>
class OracleSource final : public CoefficientSource<Scalar> {
 public:
  OracleSource(ModelParams<Scalar> p, std::shared_ptr<const MomentTable<Scalar>> moments)
      : p_(std::move(p)), moments_(std::move(moments)) {}

  const PolyW<Scalar>& monic(const MultiIndex& n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, solve_monic(p_, n, *moments_).poly).first;
    return it->second;
  }

  Scalar b(const MultiIndex& n, int ray) override {
    PrecisionGuard<Scalar> guard(p_.ctx);
    const int N = total_degree(n);
    return monic(n)[N - 1] - monic(unit_step(n, ray))[N];
  }

  Scalar d(const MultiIndex& n, int ray) override {
    PrecisionGuard<Scalar> guard(p_.ctx);
    using R = RealOf<Scalar>;
    using std::abs;
    const int j = n.at(ray) - 1;
    const PolyW<Scalar>& pn = monic(n);
    const PolyW<Scalar>& prev = monic(unit_step(n, ray, -1));
    const auto& m = *moments_;
    detail::require_coverage(m.covers(j, pn.degree() + 1), "oracle d at " + to_string(n));
    Scalar num(0);
    Scalar den(0);
    for (int k = 0; k <= pn.degree(); ++k) num += pn[k] * m(ray, j, k + 1);
    for (int k = 0; k <= prev.degree(); ++k) den += prev[k] * m(ray, j, k);
    const R scale = m.max_norm() * std::max(R(1), max_abs_coeff(prev));
    if (abs(den) <= scale * p_.ctx.template epsilon<R>() * R(1000)) {
      throw DivisionByNearZero("oracle d: vanishing denominator at " + to_string(n));
    }
    return num / den;
  }

  std::string name() const override { return "oracle"; }

 private:
  ModelParams<Scalar> p_;
  std::shared_ptr<const MomentTable<Scalar>> moments_;
  std::map<MultiIndex, PolyW<Scalar>> cache_;
};

/// Closed forms for Meixner-II; oracle extraction otherwise. The moment
/// table must cover j < max n_l and m <= |n|+1 for every index visited.
template <typename Scalar>
std::unique_ptr<CoefficientSource<Scalar>> default_source(
    const ModelParams<Scalar>& p, std::shared_ptr<const MomentTable<Scalar>> moments) {
  if (p.family == Family::Meixner2Angelesco) return std::make_unique<ClosedFormSource<Scalar>>(p);
  if (!moments) throw std::invalid_argument("oracle coefficient source needs a moment table");
  return std::make_unique<OracleSource<Scalar>>(p, std::move(moments));
}

/// Cache of polynomials reached by a walk; P_0 = 1 is always present.
template <typename Scalar>
struct LatticeWalk {
  std::vector<int> steps;
  std::map<MultiIndex, PolyW<Scalar>> cache;

  explicit LatticeWalk(int r) { cache.emplace(MultiIndex(r, 0), PolyW<Scalar>::constant(Scalar(1))); }

  bool has(const MultiIndex& n) const {
    for (int v : n) if (v < 0) return true;
    return cache.count(n) > 0;
  }
  /// P at a negative component is the zero polynomial.
  PolyW<Scalar> at(const MultiIndex& n) const {
    for (int v : n) if (v < 0) return PolyW<Scalar>();
    auto it = cache.find(n);
    if (it == cache.end()) throw MissingNeighborError("no cached polynomial at " + to_string(n));
    return it->second;
  }
};

/// P_{n+e_l} = (w - b_{n,l}) P_n - sum_j d_{n,j} P_{n-e_j}; stored in the cache.
template <typename Scalar>
PolyW<Scalar> step(const ModelParams<Scalar>& p, const MultiIndex& n, int ray,
                   LatticeWalk<Scalar>& walk, CoefficientSource<Scalar>& source) {
  PrecisionGuard<Scalar> guard(p.ctx);
  if (!walk.has(n)) throw MissingNeighborError("step needs P at " + to_string(n));
  for (int j = 0; j < p.r; ++j) {
    if (n[j] >= 1 && !walk.has(unit_step(n, j, -1))) {
      throw MissingNeighborError("step needs P at " + to_string(unit_step(n, j, -1)));
    }
  }
  const PolyW<Scalar> pn = walk.at(n);
  PolyW<Scalar> out = poly_sub(poly_mul_w(pn), poly_scale(pn, source.b(n, ray)));
  for (int j = 0; j < p.r; ++j) {
    if (n[j] < 1) continue;
    out = poly_sub(out, poly_scale(walk.at(unit_step(n, j, -1)), source.d(n, j)));
  }
  walk.cache[unit_step(n, ray)] = out;
  walk.steps.push_back(ray);
  return out;
}

/// Round-robin walk to n: cycles over the rays, raising each that is still short.
inline std::vector<int> round_robin_path(const MultiIndex& n) {
  std::vector<int> path;
  MultiIndex m(n.size(), 0);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t l = 0; l < n.size(); ++l) {
      if (m[l] < n[l]) {
        ++m[l];
        path.push_back(static_cast<int>(l));
        moved = true;
      }
    }
  }
  return path;
}

namespace detail {

inline MultiIndex endpoint(const std::vector<int>& path, std::size_t len, int r) {
  MultiIndex m(r, 0);
  for (std::size_t i = 0; i < len; ++i) ++m[path[i]];
  return m;
}

// Makes P at the end of `path` available, building missing neighbours from
// the path with the last step on their ray removed.
template <typename Scalar>
void ensure(const ModelParams<Scalar>& p, const std::vector<int>& path, LatticeWalk<Scalar>& walk,
            CoefficientSource<Scalar>& source) {
  const MultiIndex target = endpoint(path, path.size(), p.r);
  if (walk.has(target)) return;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const MultiIndex m = endpoint(path, i, p.r);
    const MultiIndex next = unit_step(m, path[i]);
    if (walk.has(next)) continue;
    for (int j = 0; j < p.r; ++j) {
      if (m[j] < 1 || walk.has(unit_step(m, j, -1))) continue;
      std::vector<int> sub(path.begin(), path.begin() + static_cast<long>(i));
      auto last = std::find(sub.rbegin(), sub.rend(), j);
      sub.erase(std::next(last).base());
      ensure(p, sub, walk, source);
    }
    step(p, m, path[i], walk, source);
  }
}

}  // namespace detail

/// P_n by the nearest-neighbour recurrence along `path` (default round-robin).
template <typename Scalar>
PolyW<Scalar> generate(const ModelParams<Scalar>& p, const MultiIndex& n,
                       const std::vector<int>& path, CoefficientSource<Scalar>& source,
                       LatticeWalk<Scalar>* walk_out = nullptr) {
  PrecisionGuard<Scalar> guard(p.ctx);
  if (detail::endpoint(path, path.size(), p.r) != n) {
    throw std::invalid_argument("path does not end at " + to_string(n));
  }
  LatticeWalk<Scalar> local(p.r);
  LatticeWalk<Scalar>& walk = walk_out ? *walk_out : local;
  detail::ensure(p, path, walk, source);
  return walk.at(n);
}

template <typename Scalar>
PolyW<Scalar> generate(const ModelParams<Scalar>& p, const MultiIndex& n,
                       CoefficientSource<Scalar>& source) {
  return generate(p, n, round_robin_path(n), source);
}

/// Every distinct lattice path from 0 to n (multiset permutations of the steps).
inline std::vector<std::vector<int>> enumerate_paths(const MultiIndex& n) {
  std::vector<int> steps;
  for (std::size_t l = 0; l < n.size(); ++l) steps.insert(steps.end(), n[l], static_cast<int>(l));
  std::vector<std::vector<int>> out;
  do {
    out.push_back(steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

template <typename Rng>
std::vector<int> random_path(const MultiIndex& n, Rng& rng) {
  std::vector<int> steps;
  for (std::size_t l = 0; l < n.size(); ++l) steps.insert(steps.end(), n[l], static_cast<int>(l));
  std::shuffle(steps.begin(), steps.end(), rng);
  return steps;
}

/// All multi-indices of r components with |n| <= nmax, graded order.
inline std::vector<MultiIndex> indices_up_to(int r, int nmax) {
  std::vector<MultiIndex> out;
  for (int total = 0; total <= nmax; ++total) {
    MultiIndex m(r, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == r - 1) {
        m[pos] = left;
        out.push_back(m);
        return;
      }
      for (int v = left; v >= 0; --v) {
        m[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

/// Three-term relation along one ray for Meixner-II:
///   M_{(m+1)e} = (w - (c(m+beta)+m)/(1-c)) M_{me} - c m (beta+m-1)/(c-1)^2 M_{(m-1)e},
/// with cascade-built M's, for m = 0..N.
template <typename Scalar>
VerificationReport single_ray_ladder_check(const ModelParams<Scalar>& p, int ray, int N,
                                           const RealOf<Scalar>& tol) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  VerificationReport report;
  if (p.family != Family::Meixner2Angelesco) {
    report.add({"single_ray_ladder", 0, 0, Verdict::NotApplicable, "Meixner-II only"});
    return report;
  }
  const Scalar c = p.ray_c(ray);
  const Scalar beta = p.ray_beta(ray);
  auto along = [&](int m) {
    MultiIndex n(p.r, 0);
    n[ray] = m;
    return m < 0 ? PolyW<Scalar>() : raising_cascade(p, n);
  };
  R worst(0);
  int worst_m = 0;
  for (int m = 0; m <= N; ++m) {
    const Scalar ms(m);
    const Scalar b = (c * (ms + beta) + ms) / (Scalar(1) - c);
    const Scalar a = c * ms * (beta + ms - Scalar(1)) / ((c - Scalar(1)) * (c - Scalar(1)));
    const PolyW<Scalar> cur = along(m);
    const PolyW<Scalar> rhs =
        poly_sub(poly_sub(poly_mul_w(cur), poly_scale(cur, b)), poly_scale(along(m - 1), a));
    const R dev = relative_distance(rhs, along(m + 1));
    if (dev > worst) {
      worst = dev;
      worst_m = m;
    }
  }
  report.add(make_check("single_ray_ladder[ray " + std::to_string(ray) + "]", worst, tol,
                        "n_l <= " + std::to_string(N) + ", worst at " + std::to_string(worst_m)));
  return report;
}

}  // namespace angelesco
