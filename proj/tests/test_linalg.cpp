#include <cmath>
#include <random>

#include "doctest.h"
#include "wbfv/linalg.hpp"

using namespace wbfv;

TEST_CASE("matvec basics") {
  const Mat i2 = Mat::identity(2);
  const Vec v{3.0, -1.0};
  const Vec r = matvec(i2, v);
  CHECK(r[0] == 3.0);
  CHECK(r[1] == -1.0);

  const Mat perm(2, {0, 1, 1, 0});
  const Vec p = matvec(perm, Vec{1.0, 0.0});
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 1.0);

  // acoustics coefficient matrix with K = 1, rho = 4 applied to [p, u] = [1, 0]
  const Mat a(2, {0, 1, 0.25, 0});
  const Vec q = matvec(a, Vec{1.0, 0.0});
  CHECK(q[0] == doctest::Approx(0.0));
  CHECK(q[1] == doctest::Approx(0.25));
}

TEST_CASE("solve known systems") {
  {
    const Vec x = solve(Mat::identity(2), Vec{2.0, 5.0});
    CHECK(x[0] == 2.0);
    CHECK(x[1] == 5.0);
  }
  {
    const Vec x = solve(Mat(2, {0, 1, 1, 0}), Vec{0.0, 1.0});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(0.0));
  }
  {
    const Vec x = solve(Mat(2, {0, 1, 2.5, 0}), Vec{0.0, 1.0});
    CHECK(x[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(0.0));
  }
}

TEST_CASE("solve rejects near-singular matrices") {
  CHECK_THROWS_AS(solve(Mat(2, {1, 2, 2, 4}), Vec{1.0, 1.0}), SingularMatrixError);
  try {
    solve(Mat(3), Vec(3));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.det_estimate == 0.0);
  }
}

TEST_CASE("solve residual on random well-conditioned matrices") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 6);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim(rng);
    Mat a(n);
    Vec b(n);
    for (int i = 0; i < n; ++i) {
      b[i] = entry(rng);
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
      a(i, i) += (a(i, i) < 0 ? -1.0 : 1.0) * n;  // diagonal dominance
    }
    const Vec x = solve(a, b);
    const double res = (matvec(a, x) - b).inf_norm() /
                       std::max(1e-300, b.inf_norm());
    worst = std::max(worst, res);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("determinant") {
  CHECK(determinant(Mat::identity(3)) == doctest::Approx(1.0));
  CHECK(determinant(Mat(2, {0, 1, 2.5, 0})) == doctest::Approx(-2.5));
  CHECK(determinant(Mat(2, {1, 2, 2, 4})) == doctest::Approx(0.0));
}

TEST_CASE("validate_decomposition flags corruption") {
  // A = [[0,1],[1,0]]: lambda = -1, 1 with P = [[-1,1],[1,1]]
  const Mat a(2, {0, 1, 1, 0});
  EigenDecomposition d;
  d.lambdas = Vec{-1.0, 1.0};
  d.p = Mat(2, {-1, 1, 1, 1});
  d.pinv = Mat(2, {-0.5, 0.5, 0.5, 0.5});
  DecompositionResiduals r = validate_decomposition(a, d);
  CHECK(r.reconstruction <= 1e-14);
  CHECK(r.inverse <= 1e-14);

  d.p(0, 0) += 0.1;
  r = validate_decomposition(a, d);
  CHECK(r.reconstruction > 1e-3);
}

TEST_CASE("sort_eigen keeps columns paired") {
  EigenDecomposition d;
  d.lambdas = Vec{2.0, -1.0, 0.0};
  d.p = Mat(3, {1, 4, 7, 2, 5, 8, 3, 6, 9});
  d.pinv = Mat(3, {10, 11, 12, 13, 14, 15, 16, 17, 18});
  sort_eigen(d);
  CHECK(d.lambdas[0] == -1.0);
  CHECK(d.lambdas[1] == 0.0);
  CHECK(d.lambdas[2] == 2.0);
  // column originally paired with lambda = -1 was (4, 5, 6)
  CHECK(d.p(0, 0) == 4.0);
  CHECK(d.p(2, 0) == 6.0);
  // row originally paired with lambda = -1 was (13, 14, 15)
  CHECK(d.pinv(0, 0) == 13.0);
  CHECK(d.pinv(0, 2) == 15.0);
}
