#include "support.hpp"

#include "angelesco/measures.hpp"

using namespace angelesco;
using namespace testing_support;

using MP = ModelParams<Complex>;

TEST_CASE("parameter validation names the violated constraint") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  auto message = [](const MP& p) {
    try {
      validate(p);
    } catch (const ParamDomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(MP::meixner2({Complex(1), Complex(2)}, C("1.5"), ctx)).find("|c| < 1") !=
        std::string::npos);
  CHECK(message(MP::meixner2({Complex(1), Complex(-2)}, C("0.5"), ctx)).find("nonpositive") !=
        std::string::npos);
  CHECK(message(MP::meixner2({C("1.5"), C("1.5")}, C("0.5"), ctx)).find("distinct") !=
        std::string::npos);
  CHECK(message(MP::charlier({Complex(1), Complex(0)}, ctx)).find("nonzero") != std::string::npos);
  CHECK(message(MP::meixner1(C("1.5"), {C("0.3"), C("0.3")}, ctx)).find("distinct") !=
        std::string::npos);
  CHECK(message(MP::meixner1(Complex(0), {C("0.3"), C("0.6")}, ctx)).find("Gamma") !=
        std::string::npos);
  CHECK(message(MP::meixner2({C("0.7"), C("1.9")}, C("0.3", "0.2"), ctx)).empty());
}

TEST_CASE("integer beta differences produce a warning, not an error") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  CHECK(validate(MP::meixner2({Complex(1), Complex(2)}, C("0.5"), ctx)).size() == 1);
  CHECK(validate(MP::meixner2({C("0.7"), C("1.9"), C("3.3")}, C("0.5"), ctx)).empty());
}

TEST_CASE("mass points lie on their rays") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto mp = mass_point<Complex>(4, 1, 16, ctx);
  CHECK(d(err(mp.z, Complex(0, 2))) < 1e-55);
  CHECK(mp.w == 16);
  CHECK(mass_point<Complex>(3, 2, 0, ctx).z == Complex(0));
}

TEST_CASE("weights") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto m = MP::meixner2({Complex(2)}, C("0.5"), ctx);
  // Gamma(3+2) 0.5^3 / 3! = 24/48
  CHECK(d(err(weight_at(m, 0, 3), C("0.5"))) < 1e-48);
  const auto c = MP::charlier({Complex(2)}, ctx);
  CHECK(d(err(weight_at(c, 0, 2), Complex(2))) < 1e-48);
}

TEST_CASE("moment table: closed-form totals") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const Real tol("1e-45");

  SUBCASE("Meixner beta=1, c=1/2 has total mass 2") {
    const auto p = MP::meixner2({Complex(1)}, C("0.5"), ctx);
    const auto t = compute_moment_table(p, 0, 0, tol);
    CHECK(d(err(t(0, 0, 0), Complex(2))) < 1e-44);
    CHECK(t.tail_bound <= tol);
    CHECK(t.truncation_K > 20);
  }
  SUBCASE("Meixner complex c: mass Gamma(b)(1-c)^-b, mean b c/(1-c)") {
    const Complex c = C("0.3", "0.2");
    const Complex b = C("1.5", "0.5");
    const auto p = MP::meixner2({b, Complex(1)}, c, ctx);
    const auto t = compute_moment_table(p, 1, 1, tol);
    const Complex mass = exp(log_gamma(b, ctx) - b * log(Complex(1) - c));
    CHECK(d(err(t(0, 0, 0), mass)) < 1e-44);
    CHECK(d(err(t(0, 0, 1), mass * b * c / (Complex(1) - c))) < 1e-44);
    CHECK(d(err(t(0, 1, 0), -t(0, 0, 1))) < 1e-44);  // (-k)_1 = -k
  }
  SUBCASE("Charlier: e^a, a e^a, (a^2+a) e^a") {
    const Complex a = C("1.25", "-0.5");
    const auto p = MP::charlier({a, Complex(2)}, ctx);
    const auto t = compute_moment_table(p, 2, 2, tol);
    const Complex ea = exp(a);
    CHECK(d(err(t(0, 0, 0), ea)) < 1e-44);
    CHECK(d(err(t(0, 0, 1), a * ea)) < 1e-44);
    CHECK(d(err(t(0, 0, 2), (a * a + a) * ea)) < 1e-44);
    // (-k)_2 = k^2 - k
    CHECK(d(err(t(0, 2, 0), a * a * ea)) < 1e-44);
  }
}

TEST_CASE("doubling the truncation leaves certified moments unchanged") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const Real tol("1e-40");
  const auto p = MP::meixner2({C("0.7"), C("1.9"), C("3.3")}, C("0.5"), ctx);
  const auto t = compute_moment_table(p, 3, 6, tol);
  const auto t2 = compute_moment_table_fixed(p, 3, 6, 2 * t.truncation_K);
  Real worst(0);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j <= 3; ++j)
      for (int m = 0; m <= 6; ++m) worst = std::max(worst, err(t(l, j, m), t2(l, j, m)));
  CHECK(worst <= tol);
}

TEST_CASE("Pearson equation at r = 1") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto m = MP::meixner2({C("1.9")}, C("0.3"), ctx);
  CHECK(check_pearson(m, 0, 30).passed());
  const auto c = MP::charlier({C("2.5")}, ctx);
  const auto rep = check_pearson(c, 0, 30);
  CHECK(rep.passed());
  CHECK(rep.checks.front().residual <= 1e-45);
  const auto r2 = MP::charlier({Complex(1), Complex(2)}, ctx);
  CHECK(check_pearson(r2, 0, 5).checks.front().verdict == Verdict::NotApplicable);
}

TEST_CASE("weights are omega-symmetric") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.5", "0.5"), C("2.5")}, C("0.3", "0.2"), ctx);
  CHECK(omega_symmetry_check(p, {C("0.5", "0.25"), C("1.75", "-0.5")}).passed());
}

TEST_CASE("Gamma poles in the weight are reported as domain errors") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  auto p = MP::meixner2({Complex(1)}, C("0.5"), ctx);
  p.beta[0] = Complex(-2);  // bypasses validate on purpose
  CHECK_THROWS_AS(compute_moment_table(p, 1, 1, Real("1e-40")), ParamDomainError);
}
