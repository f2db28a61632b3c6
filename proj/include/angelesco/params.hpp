#pragma once

#include <string>
#include <vector>

#include "angelesco/errors.hpp"
#include "angelesco/numeric.hpp"
#include "angelesco/precision.hpp"

namespace angelesco {

enum class Family { CharlierAngelesco, Meixner1Angelesco, Meixner2Angelesco };

std::string to_string(Family f);
/// Accepts "charlier", "meixner1", "meixner2" (case-insensitive).
Family parse_family(const std::string& name);

/// Orthogonality orders (n_0, ..., n_{r-1}).
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& n) {
  int s = 0;
  for (int v : n) s += v;
  return s;
}

inline MultiIndex unit_step(const MultiIndex& n, int ray, int delta = 1) {
  MultiIndex m = n;
  m[ray] += delta;
  return m;
}

std::string to_string(const MultiIndex& n);

/// Weight family, star order and complex parameters.
///
/// Every ray carries a weight of the form Gamma(k+beta_l) c_l^k / k!
/// (Meixner kinds) or a_l^k / k! (Charlier); `ray_beta` and `ray_c`
/// resolve shared versus per-ray parameters.
template <typename Scalar>
struct ModelParams {
  Family family = Family::Meixner2Angelesco;
  int r = 1;
  std::vector<Scalar> a;     // Charlier: one per ray
  std::vector<Scalar> c;     // Meixner2: shared (size 1); Meixner1: one per ray
  std::vector<Scalar> beta;  // Meixner1: shared (size 1); Meixner2: one per ray
  PrecisionContext ctx;

  static ModelParams charlier(std::vector<Scalar> a, PrecisionContext ctx) {
    ModelParams p;
    p.family = Family::CharlierAngelesco;
    p.r = static_cast<int>(a.size());
    p.a = std::move(a);
    p.ctx = ctx;
    return p;
  }
  static ModelParams meixner1(Scalar beta, std::vector<Scalar> c, PrecisionContext ctx) {
    ModelParams p;
    p.family = Family::Meixner1Angelesco;
    p.r = static_cast<int>(c.size());
    p.c = std::move(c);
    p.beta = {std::move(beta)};
    p.ctx = ctx;
    return p;
  }
  static ModelParams meixner2(std::vector<Scalar> beta, Scalar c, PrecisionContext ctx) {
    ModelParams p;
    p.family = Family::Meixner2Angelesco;
    p.r = static_cast<int>(beta.size());
    p.beta = std::move(beta);
    p.c = {std::move(c)};
    p.ctx = ctx;
    return p;
  }

  bool is_meixner() const { return family != Family::CharlierAngelesco; }
  Scalar ray_a(int l) const { return a.at(l); }
  Scalar ray_c(int l) const { return family == Family::Meixner1Angelesco ? c.at(l) : c.at(0); }
  Scalar ray_beta(int l) const {
    return family == Family::Meixner2Angelesco ? beta.at(l) : beta.at(0);
  }
};

namespace detail {
template <typename Scalar>
bool is_nonpositive_integer(const Scalar& x, const RealOf<Scalar>& eps) {
  using std::abs;
  using std::floor;
  using std::real;
  const RealOf<Scalar> re = real(x);
  const RealOf<Scalar> nearest = floor(re + RealOf<Scalar>(0.5));
  return nearest <= 0 && abs(x - Scalar(nearest)) <= eps * (1 + abs(x));
}

template <typename Scalar>
bool is_integer(const Scalar& x, const RealOf<Scalar>& eps) {
  using std::abs;
  using std::floor;
  using std::real;
  const RealOf<Scalar> nearest = floor(real(x) + RealOf<Scalar>(0.5));
  return abs(x - Scalar(nearest)) <= eps * (1 + abs(x));
}

template <typename Scalar>
void require_distinct(const std::vector<Scalar>& v, const RealOf<Scalar>& eps, const char* what) {
  using std::abs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (abs(v[i] - v[j]) <= eps * (1 + abs(v[i]))) {
        throw ParamDomainError(std::string(what) + " must be pairwise distinct (rays " +
                               std::to_string(i) + " and " + std::to_string(j) + ")");
      }
    }
  }
}
}  // namespace detail

/// Checks the family's parameter domain. Throws ParamDomainError naming the
/// violated constraint; returns non-fatal warnings (integer beta
/// differences for Meixner2, which can make some indices non-normal).
template <typename Scalar>
std::vector<std::string> validate(const ModelParams<Scalar>& p) {
  PrecisionGuard<Scalar> guard(p.ctx);
  using R = RealOf<Scalar>;
  using std::abs;
  const R eps = p.ctx.template epsilon<R>() * 100;
  std::vector<std::string> warnings;
  if (p.r < 1) throw ParamDomainError("star order r must be >= 1");

  auto check_c = [&](const Scalar& c, const std::string& label) {
    if (abs(c) <= eps) throw ParamDomainError(label + " must be nonzero");
    if (abs(c) >= R(1)) throw ParamDomainError("|" + label + "| < 1 is required for convergence");
  };
  auto check_beta = [&](const Scalar& b, const std::string& label) {
    if (detail::is_nonpositive_integer(b, eps)) {
      throw ParamDomainError(label + " must not be a nonpositive integer (Gamma pole)");
    }
  };

  switch (p.family) {
    case Family::CharlierAngelesco:
      if (static_cast<int>(p.a.size()) != p.r) throw ParamDomainError("need one a per ray");
      for (std::size_t l = 0; l < p.a.size(); ++l) {
        if (abs(p.a[l]) <= eps) throw ParamDomainError("a_" + std::to_string(l) + " must be nonzero");
      }
      detail::require_distinct(p.a, eps, "a_l");
      break;
    case Family::Meixner1Angelesco:
      if (static_cast<int>(p.c.size()) != p.r) throw ParamDomainError("need one c per ray");
      if (p.beta.size() != 1) throw ParamDomainError("Meixner-I takes a single shared beta");
      for (std::size_t l = 0; l < p.c.size(); ++l) check_c(p.c[l], "c_" + std::to_string(l));
      detail::require_distinct(p.c, eps, "c_l");
      check_beta(p.beta[0], "beta");
      break;
    case Family::Meixner2Angelesco:
      if (static_cast<int>(p.beta.size()) != p.r) throw ParamDomainError("need one beta per ray");
      if (p.c.size() != 1) throw ParamDomainError("Meixner-II takes a single shared c");
      check_c(p.c[0], "c");
      for (std::size_t l = 0; l < p.beta.size(); ++l) check_beta(p.beta[l], "beta_" + std::to_string(l));
      detail::require_distinct(p.beta, eps, "beta_l");
      for (std::size_t i = 0; i < p.beta.size(); ++i) {
        for (std::size_t j = i + 1; j < p.beta.size(); ++j) {
          if (detail::is_integer(Scalar(p.beta[i] - p.beta[j]), eps)) {
            warnings.push_back("beta_" + std::to_string(i) + " - beta_" + std::to_string(j) +
                               " is an integer; some multi-indices may not be normal");
          }
        }
      }
      break;
  }
  return warnings;
}

/// True when all parameters are real and in the classical positive domain
/// (0 < c < 1, beta > 0, a > 0).
template <typename Scalar>
bool has_classical_real_params(const ModelParams<Scalar>& p) {
  using std::imag;
  using std::real;
  auto real_positive = [](const Scalar& x) { return imag(x) == 0 && real(x) > 0; };
  for (const auto& v : p.a) if (!real_positive(v)) return false;
  for (const auto& v : p.beta) if (!real_positive(v)) return false;
  for (const auto& v : p.c) if (!real_positive(v) || real(v) >= 1) return false;
  return true;
}

}  // namespace angelesco
