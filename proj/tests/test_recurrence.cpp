#include <random>

#include "support.hpp"

#include "angelesco/recurrence.hpp"

using namespace angelesco;
using namespace testing_support;

using MP = ModelParams<Complex>;
using P = PolyW<Complex>;

namespace {
std::shared_ptr<const MomentTable<Complex>> table(const MP& p, int jmax, int mmax) {
  return std::make_shared<const MomentTable<Complex>>(
      compute_moment_table(p, jmax, mmax, Real("1e-48")));
}
}  // namespace

TEST_CASE("closed-form coefficients") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({Complex(1), Complex(2)}, C("0.5"), ctx);
  const auto k = closed_form_coeffs(p, {1, 1});
  CHECK(d(err(k.b[0], Complex(6))) < 1e-48);
  CHECK(d(err(k.d[1], Complex(4))) < 1e-48);
  const auto z = closed_form_coeffs(p, {0, 0});
  CHECK(d(err(z.b[1], Complex(2))) < 1e-48);  // c beta_1/(1-c)
  CHECK(z.d[0] == Complex(0));
  CHECK(z.d[1] == Complex(0));
}

TEST_CASE("single step and the two paths to (1,1)") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  ClosedFormSource<Complex> src(MP::meixner2({Complex(1)}, C("0.5"), ctx));
  const auto p1 = MP::meixner2({Complex(1)}, C("0.5"), ctx);
  LatticeWalk<Complex> walk(1);
  CHECK(step(p1, {0}, 0, walk, src) == (P{Complex(-1), Complex(1)}));

  const auto p = MP::meixner2({Complex(1), Complex(2)}, C("0.5"), ctx);
  ClosedFormSource<Complex> src2(p);
  const P target{Complex(2), Complex(-5), Complex(1)};
  CHECK(d(relative_distance(generate(p, {1, 1}, {0, 1}, src2), target)) < 1e-48);
  CHECK(d(relative_distance(generate(p, {1, 1}, {1, 0}, src2), target)) < 1e-48);
  CHECK(generate(p, {0, 0}, src2) == P::constant(Complex(1)));
}

TEST_CASE("a step without its neighbours is refused") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.9")}, C("0.3"), ctx);
  ClosedFormSource<Complex> src(p);
  LatticeWalk<Complex> walk(2);
  CHECK_THROWS_AS(step(p, {1, 1}, 0, walk, src), MissingNeighborError);
  CHECK(walk.at({-1, 0}).is_zero());
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths({2, 2}).size() == 6);
  CHECK(enumerate_paths({2, 1, 1}).size() == 12);
  CHECK(round_robin_path({2, 0, 1}) == std::vector<int>{0, 2, 0});
  CHECK(indices_up_to(2, 4).size() == 15);
  CHECK(indices_up_to(3, 2).size() == 10);
}

TEST_CASE("all six paths to (2,2) agree with oracle coefficients") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.9")}, C("0.3"), ctx);
  OracleSource<Complex> src(p, table(p, 3, 6));
  const auto paths = enumerate_paths({2, 2});
  const P first = generate(p, {2, 2}, paths.front(), src);
  for (const auto& path : paths) {
    CHECK(d(relative_distance(generate(p, {2, 2}, path, src), first)) < 1e-40);
  }
  CHECK(d(relative_distance(first, raising_cascade(p, {2, 2}))) < 1e-40);
}

TEST_CASE("recurrence output is orthogonal at r = 3") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.5", "0.5"), C("2.5")}, C("0.3", "0.2"), ctx);
  const auto t = table(p, 3, 7);
  OracleSource<Complex> src(p, t);
  const P poly = generate(p, {2, 1, 2}, src);
  const Real scale = max_abs_coeff(poly) * t->max_norm();
  CHECK(d(max_residual(residuals(p, {2, 1, 2}, poly, *t)) / scale) < 1e-40);
}

TEST_CASE("closed-form d matches the oracle on single-ray indices only") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.9")}, C("0.3"), ctx);
  OracleSource<Complex> oracle(p, table(p, 4, 6));
  ClosedFormSource<Complex> closed(p);
  for (int m = 1; m <= 3; ++m) {
    CHECK(d(err(closed.d({m, 0}, 0), oracle.d({m, 0}, 0))) < 1e-40);
    CHECK(d(err(closed.d({0, m}, 1), oracle.d({0, m}, 1))) < 1e-40);
  }
  for (const MultiIndex& n : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{1, 2}}) {
    CHECK(d(err(closed.b(n, 0), oracle.b(n, 0))) < 1e-40);
    // derived correction: prod_{i != j} (b_j - b_i + n_j) / (b_j - b_i + n_j - n_i)
    for (int j = 0; j < 2; ++j) {
      const int i = 1 - j;
      const Complex shift = p.beta[j] - p.beta[i] + Complex(n[j]);
      const Complex corrected = closed.d(n, j) * shift / (shift - Complex(n[i]));
      CHECK(d(err(corrected, oracle.d(n, j))) < 1e-40);
      CHECK(d(err(closed.d(n, j), oracle.d(n, j))) > 1e-3);
    }
  }
}

TEST_CASE("r = 1 coefficients reduce to the classical Meixner table") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const Complex beta = C("1.9");
  const Complex c = C("0.3");
  const auto p = MP::meixner2({beta}, c, ctx);
  for (int n = 0; n <= 8; ++n) {
    const auto k = closed_form_coeffs(p, {n});
    const Complex N(n);
    CHECK(d(err(k.b[0], (N + (beta + N) * c) / (Complex(1) - c))) < 1e-48);
    CHECK(d(err(k.d[0], c * N * (beta + N - Complex(1)) / ((Complex(1) - c) * (Complex(1) - c)))) <
          1e-48);
  }
}

TEST_CASE("single-ray ladder") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::meixner2({C("0.7"), C("1.5", "0.5"), C("2.5")}, C("0.3", "0.2"), ctx);
  for (int l = 0; l < 3; ++l) CHECK(single_ray_ladder_check(p, l, 8, Real("1e-40")).passed());
  const auto ch = MP::charlier({Complex(1)}, ctx);
  CHECK(single_ray_ladder_check(ch, 0, 3, Real("1e-40")).checks.front().verdict ==
        Verdict::NotApplicable);
}

TEST_CASE("Charlier walk uses oracle coefficients") {
  const auto ctx = ctx50();
  PrecisionGuard<Complex> g(ctx);
  const auto p = MP::charlier({Complex(1), Complex(2), Complex(3)}, ctx);
  auto src = default_source(p, table(p, 3, 6));
  CHECK(src->name() == "oracle");
  CHECK(d(relative_distance(generate(p, {2, 1, 2}, *src), raising_cascade(p, {2, 1, 2}))) < 1e-40);
}
