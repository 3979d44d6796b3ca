#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hallar/kernels.hpp"
#include "oracle.hpp"

using namespace hallar;

namespace {

Matrix random_factor(Index n, Index r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix Y(n, r);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < r; ++j) Y(i, j) = g(rng);
  return Y;
}

}  // namespace

TEST_CASE("quadform on the zero matrix is zero") {
  HybridMatrix Z(5);
  const Matrix Y = random_factor(5, 2, 1);
  CHECK(quadform(Z, Y) == 0.0);
}

TEST_CASE("quadform of A3 at the all-ones column matches the dense route") {
  const SdpInstance inst = fixtures::simple_example();
  const Matrix Y = Matrix::Ones(4, 1);
  const double got = quadform(inst.constraint(2), Y);
  const Vector e = Vector::Ones(4);
  const double want = e.dot(fixtures::dense_A3() * e);
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
  // eᵀ A₃^sp e = 1.4 + 1 − 1 − 1 = 0.4; (Pᵀe) = (6,5) gives −44 on the low-rank part
  CHECK(got == doctest::Approx(-43.6).epsilon(1e-12));
}

TEST_CASE("quadform of C at the identity factor equals Tr(I + eeT) = 8") {
  const SdpInstance inst = fixtures::simple_example();
  CHECK(quadform(inst.cost(), Matrix::Identity(4, 4)) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("quadform rejects dimension mismatch") {
  const SdpInstance inst = fixtures::simple_example();
  CHECK_THROWS_AS(quadform(inst.cost(), Matrix::Ones(3, 1)), std::invalid_argument);
}

TEST_CASE("apply_A at the zero factor is the zero vector") {
  const SdpInstance inst = fixtures::simple_example();
  const Vector v = apply_A(inst, Matrix::Zero(4, 1));
  CHECK(v.norm() == 0.0);
  CHECK(v.size() == 3);
}

TEST_CASE("apply_A at the identity factor traces all three matrices") {
  const SdpInstance inst = fixtures::simple_example();
  const Vector got = apply_A(inst, Matrix::Identity(4, 4));
  CHECK(got[0] == doctest::Approx(fixtures::dense_A1().trace()).epsilon(1e-12));
  CHECK(got[1] == doctest::Approx(fixtures::dense_A2().trace()).epsilon(1e-12));
  CHECK(got[2] == doctest::Approx(fixtures::dense_A3().trace()).epsilon(1e-12));
  CHECK(got[0] == doctest::Approx(2.0));
  CHECK(got[1] == doctest::Approx(4.0));
  // Tr(A₃) = 0 + ⟨D₃, P₃ᵀP₃⟩ = 10 − 3.5 − 3.5 − 14 = −11
  CHECK(got[2] == doctest::Approx(-11.0));
}

TEST_CASE("apply_A reproduces b on the matrix-completion example") {
  const SdpInstance inst = fixtures::matcomp_small();
  Matrix Y(4, 2);
  Y << 5, 0,
       0, 3,
       1, 0,
       0, 1;  // X₁₃ = 5, X₂₄ = 3
  const Vector got = apply_A(inst, Y);
  CHECK(got[0] == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(got[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("apply_Astar_vec basics") {
  const SdpInstance inst = fixtures::simple_example();
  const Vector e = Vector::Ones(4);
  CHECK(apply_Astar_vec(inst, Vector::Zero(3), e).norm() == 0.0);
  Vector p = Vector::Zero(3);
  p[0] = 1.0;
  const Vector got = apply_Astar_vec(inst, p, e);
  CHECK((got - 0.5 * e).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("adjoint identity holds on random hybrid instances") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 120; ++trial) {
    const SdpInstance inst = oracle::random_instance(1000 + trial, 8, 5);
    const Matrix Y = random_factor(inst.n, 1 + (trial % 3), 40 + trial);
    Vector p(inst.m);
    for (Index l = 0; l < inst.m; ++l) p[l] = g(rng);

    const double lhs = apply_A(inst, Y).dot(p);
    Matrix Astar = Matrix::Zero(inst.n, inst.n);
    for (Index l = 0; l < inst.m; ++l) Astar += p[l] * dense(inst.constraint(l));
    const double rhs = (Y.transpose() * Astar * Y).trace();

    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);

    // the vector form agrees column by column
    double rhs2 = 0.0;
    for (Index c = 0; c < Y.cols(); ++c)
      rhs2 += Y.col(c).dot(apply_Astar_vec(inst, p, Y.col(c)));
    CHECK(std::abs(lhs - rhs2) <= 1e-10 * scale);
  }
}

TEST_CASE("quadform agrees with the dense oracle on random matrices") {
  for (int trial = 0; trial < 100; ++trial) {
    const SdpInstance inst = oracle::random_instance(2000 + trial, 8, 4);
    const Matrix Y = random_factor(inst.n, 2, 90 + trial);
    const Matrix X = Y * Y.transpose();
    for (Index l = 0; l <= inst.m; ++l) {
      const double got = quadform(inst.mats[static_cast<std::size_t>(l)], Y);
      const double want = dense(inst.mats[static_cast<std::size_t>(l)]).cwiseProduct(X).sum();
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("al_objective special cases") {
  const SdpInstance inst = fixtures::simple_example();

  SUBCASE("zero residual leaves only the cost term") {
    SdpInstance planted = oracle::random_instance(42);
    const Matrix Y = random_factor(planted.n, 2, 5);
    planted.b = apply_A(planted, Y);  // exact feasibility
    const Vector p = Vector::Ones(planted.m);
    CHECK(al_objective(planted, Y, p, 3.0) ==
          doctest::Approx(primal_value(planted, Y)).epsilon(1e-12));
  }

  SUBCASE("zero factor with zero multiplier gives (beta/2)*||b||^2") {
    const double beta = 2.5;
    CHECK(al_objective(inst, Matrix::Zero(4, 1), Vector::Zero(3), beta) ==
          doctest::Approx(0.5 * beta * inst.b.squaredNorm()).epsilon(1e-14));
  }

  SUBCASE("agrees with the dense evaluation on random data") {
    for (int trial = 0; trial < 100; ++trial) {
      const SdpInstance ri = oracle::random_instance(3000 + trial);
      const Matrix Y = random_factor(ri.n, 2, trial);
      Vector p = Vector::Constant(ri.m, 0.3);
      const double beta = 1.0 + (trial % 5);
      const Matrix X = Y * Y.transpose();
      Vector ax(ri.m);
      for (Index l = 0; l < ri.m; ++l) ax[l] = dense(ri.constraint(l)).cwiseProduct(X).sum();
      const Vector r = ax - ri.b;
      const double want =
          dense(ri.cost()).cwiseProduct(X).sum() + p.dot(r) + 0.5 * beta * r.squaredNorm();
      CHECK(al_objective(ri, Y, p, beta) == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("al_gradient vanishes at the zero factor") {
  const SdpInstance inst = fixtures::stable_set_c4();
  // with p = 0 the gradient is 2(C + βA(0))·0 = 0
  CHECK(al_gradient(inst, Matrix::Zero(4, 2), Vector::Zero(4), 1.0).norm() == 0.0);
}

TEST_CASE("al_gradient matches the dense formula on the hybrid example") {
  const SdpInstance inst = fixtures::simple_example();
  const Matrix Y = Matrix::Ones(4, 1);
  const Vector p = Vector::Zero(3);
  const double beta = 1.0;
  const Matrix got = al_gradient(inst, Y, p, beta);

  Matrix X = Y * Y.transpose();
  Vector ax(3);
  const Matrix A[3] = {fixtures::dense_A1(), fixtures::dense_A2(), fixtures::dense_A3()};
  for (int l = 0; l < 3; ++l) ax[l] = A[l].cwiseProduct(X).sum();
  const Vector q = p + beta * (ax - inst.b);
  Matrix S = fixtures::dense_C();
  for (int l = 0; l < 3; ++l) S += q[l] * A[l];
  const Matrix want = 2.0 * S * Y;
  CHECK((got - want).norm() <= 1e-12 * want.norm());
}

TEST_CASE("al_gradient passes central finite-difference checks") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  const double h = 1e-6;
  int checked = 0;
  for (int trial = 0; trial < 110; ++trial) {
    const SdpInstance inst = oracle::random_instance(4000 + trial);
    const Matrix Y = random_factor(inst.n, 1 + (trial % 2), 17 + trial);
    Vector p(inst.m);
    for (Index l = 0; l < inst.m; ++l) p[l] = g(rng);
    const double beta = 0.5 + (trial % 4);

    Matrix dir = random_factor(inst.n, Y.cols(), 71 + trial);
    dir /= dir.norm();
    const double fp = al_objective(inst, Y + h * dir, p, beta);
    const double fm = al_objective(inst, Y - h * dir, p, beta);
    const double fd = (fp - fm) / (2.0 * h);
    const double an = al_gradient(inst, Y, p, beta).cwiseProduct(dir).sum();
    CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("primal and dual value formulas") {
  const SdpInstance inst = fixtures::simple_example();
  CHECK(primal_value(inst, Matrix::Zero(4, 1)) == 0.0);
  CHECK(primal_value(inst, Matrix::Identity(4, 4)) == doctest::Approx(8.0));
  CHECK(dual_value(inst, Vector::Zero(3), 0.0) == 0.0);
  Vector p = Vector::Zero(3);
  p[0] = 1.0;
  CHECK(dual_value(inst, p, 1.0) == doctest::Approx(-7.0));  // −b₁ − τ = −2 − 5
}

TEST_CASE("dense densification matches the displayed matrices") {
  const SdpInstance inst = fixtures::simple_example();
  CHECK(dense(HybridMatrix(3)).norm() == 0.0);
  CHECK((dense(inst.cost()) - fixtures::dense_C()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((dense(inst.constraint(2)) - fixtures::dense_A3()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("dense guards against large dimensions") {
  CHECK_THROWS_AS(dense(HybridMatrix(4096)), std::invalid_argument);
}

TEST_CASE("factor norm equals the trace both ways") {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix Y = random_factor(3 + trial % 5, 1 + trial % 3, trial);
    CHECK(Y.squaredNorm() == doctest::Approx((Y * Y.transpose()).trace()).epsilon(1e-12));
  }
}

TEST_CASE("SparseSym validates its entries") {
  CHECK_THROWS_AS(SparseSym(3, {{0, 0, 1.0}, {0, 0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseSym(3, {{2, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseSym(3, {{0, 3, 1.0}}), std::invalid_argument);
}

TEST_CASE("LowRankFactor rejects asymmetric D") {
  Matrix P = Matrix::Ones(3, 2);
  Matrix D(2, 2);
  D << 1, 2,
       0, 1;
  CHECK_THROWS_AS(LowRankFactor(P, D), std::invalid_argument);
}

TEST_CASE("SdpInstance validation") {
  SdpInstance inst = fixtures::simple_example();
  inst.tau = 0.0;
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  inst.tau = 5.0;
  inst.b = Vector::Zero(2);
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
}
