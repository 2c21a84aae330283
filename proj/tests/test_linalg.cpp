#include <doctest.h>

#include <cmath>

#include "lqsyn/linalg.hpp"
#include "lqsyn/rng.hpp"

using namespace lqsyn;

namespace {

Matrix random_sym(int n, RngStream& rng) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) a.row(i) = rng.normal_vec(n).transpose();
  return 0.5 * (a + a.transpose());
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("symmatrix rejects asymmetric input and averages roundoff") {
  Matrix bad(2, 2);
  bad << 1.0, 2.0, 3.0, 1.0;
  CHECK_THROWS_AS(SymMatrix{bad}, DimensionMismatch);

  Matrix drift(2, 2);
  drift << 1.0, 2.0, 2.0 + 1e-14, 1.0;
  SymMatrix s(drift);
  CHECK(s(0, 1) == s(1, 0));
}

TEST_CASE("cholesky of identity is identity") {
  auto f = cholesky(SymMatrix::identity(3));
  CHECK((f.L - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cholesky reconstructs and matches the 2x2 hand factor") {
  Matrix m(2, 2);
  m << 4.0, 2.0, 2.0, 3.0;
  auto f = cholesky(SymMatrix(m));
  CHECK((f.L * f.L.transpose() - m).norm() <= 1e-10 * m.norm());
  CHECK(f.L(0, 0) == doctest::Approx(2.0));
  CHECK(f.L(1, 0) == doctest::Approx(1.0));
  CHECK(f.L(1, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("cholesky rejects an indefinite matrix with the failing pivot") {
  Matrix m(2, 2);
  m << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3, -1
  try {
    cholesky(SymMatrix(m));
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.pivot == 1);
  }
}

TEST_CASE("sym_eig on simple spectra") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1.0, 2.0, 3.0;
  auto eig = sym_eig(SymMatrix(d));
  CHECK(eig.values(0) == doctest::Approx(1.0));
  CHECK(eig.values(1) == doctest::Approx(2.0));
  CHECK(eig.values(2) == doctest::Approx(3.0));

  Matrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  auto e2 = sym_eig(SymMatrix(swap));
  CHECK(e2.values(0) == doctest::Approx(-1.0));
  CHECK(e2.values(1) == doctest::Approx(1.0));
}

TEST_CASE("sym_eig reconstruction and orthonormality on random input") {
  RngStream rng(7);
  for (int n : {5, 20, 50}) {
    const Matrix m = random_sym(n, rng);
    auto eig = sym_eig(SymMatrix(m));
    const Matrix rec = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
    CHECK((rec - m).norm() <= 1e-9 * std::max(1.0, m.norm()));
    CHECK((eig.vectors.transpose() * eig.vectors - Matrix::Identity(n, n)).norm() <= 1e-9);
  }
}

TEST_CASE("min_eig on simple matrices") {
  CHECK(min_eig(SymMatrix::identity(4)) == doctest::Approx(1.0));
  CHECK(min_eig(SymMatrix::zero(3)) == doctest::Approx(0.0));
  Matrix m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  CHECK(min_eig(SymMatrix(m)) == doctest::Approx(1.0));  // roots of (2-l)^2 = 1
}

TEST_CASE("cholesky succeeds exactly when the matrix is positive definite") {
  RngStream rng(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    Matrix m = random_sym(n, rng);
    if (trial % 2 == 0) {
      m += (1.0 + 3.0 * std::fabs(rng.normal())) * std::sqrt(double(n)) *
           Matrix::Identity(n, n);
    }
    const double lam = min_eig(SymMatrix(m));
    if (std::fabs(lam) <= 1e-8) continue;  // too close to the boundary to classify
    ++checked;
    bool ok = true;
    try {
      cholesky(SymMatrix(m));
    } catch (const NotPositiveDefinite&) {
      ok = false;
    }
    CHECK(ok == (lam > 0.0));
  }
  CHECK(checked > 30);
}

TEST_CASE("psd_sqrt squares back and rejects indefinite input") {
  RngStream rng(3);
  Matrix m = random_sym(4, rng);
  m = m * m.transpose();  // PSD
  const Matrix r = psd_sqrt(SymMatrix(m));
  CHECK((r * r - m).norm() <= 1e-9 * std::max(1.0, m.norm()));

  Matrix neg(2, 2);
  neg << 1.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(psd_sqrt(SymMatrix(neg)), NotPsd);
}

}  // TEST_SUITE
