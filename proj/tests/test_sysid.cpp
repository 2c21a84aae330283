#include <doctest.h>

#include <cmath>

#include "lqsyn/sysid.hpp"
#include "test_systems.hpp"

using namespace lqsyn;

TEST_SUITE("sysid") {

TEST_CASE("least squares recovers the plant from noiseless data") {
  const LTISystem sys = test_systems::mild_plant(0.0);
  const IdDataset data = collect_id_data(sys, 1.0, 4, 4, RngStream(3));
  const auto [A_hat, B_hat] = least_squares_fit(data);
  CHECK((A_hat - sys.A).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((B_hat - sys.B).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("least squares leaves no residual gradient") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  const IdDataset data = collect_id_data(sys, 1.0, 30, 5, RngStream(5));
  const auto [A_hat, B_hat] = least_squares_fit(data);
  Matrix grad = Matrix::Zero(3, 5);
  for (const auto& s : data.samples) {
    Vector phi(5);
    phi << s.x, s.u;
    grad += (A_hat * s.x + B_hat * s.u - s.x_next) * phi.transpose();
  }
  CHECK(grad.cwiseAbs().maxCoeff() <= 1e-8 * data.count());
}

TEST_CASE("underdetermined fit is rejected") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  IdDataset data = collect_id_data(sys, 1.0, 1, 5, RngStream(6));
  data.samples.resize(3);  // fewer samples than nx + nu = 5
  CHECK_THROWS_AS(least_squares_fit(data), RankDeficient);
}

TEST_CASE("estimation error shrinks with more data") {
  const LTISystem sys = test_systems::mild_plant(0.5);
  double err_small = 0.0, err_large = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto fit_n = [&](int n_rollouts, int stream) {
      const IdDataset d =
          collect_id_data(sys, 1.0, n_rollouts, 5, RngStream(100 + rep, stream));
      const auto [A_hat, B_hat] = least_squares_fit(d);
      return (A_hat - sys.A).norm();
    };
    err_small += fit_n(100, 0);
    err_large += fit_n(1000, 1);
  }
  CHECK(err_large < err_small);
}

TEST_CASE("chi-squared critical values") {
  CHECK(chi2_quantile(2, 0.05) == doctest::Approx(-2.0 * std::log(0.05)).epsilon(1e-9));
  CHECK(chi2_quantile(15, 0.05) == doctest::Approx(24.9958).epsilon(1e-4));
  CHECK(chi2_quantile(1, 0.3173) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(chi2_quantile(2, 0.0), DomainError);
  CHECK_THROWS_AS(chi2_quantile(2, 1.0), DomainError);
  CHECK_THROWS_AS(chi2_quantile(0, 0.5), DomainError);
}

TEST_CASE("uncertainty matrix on a single unit sample") {
  IdDataset data;
  Vector x(1), u(1), xn(1);
  x << 1.0;
  u << 0.0;
  xn << 0.0;
  data.samples.push_back({x, u, xn});
  const SymMatrix D = uncertainty_matrix(data, 1.0, 0.05);
  const double c_chi = chi2_quantile(2, 0.05);  // dof = nx^2 + nx*nu = 2
  CHECK(D(0, 0) == doctest::Approx(1.0 / c_chi));
  CHECK(D(0, 1) == doctest::Approx(0.0));
  CHECK(D(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("zero input data leaves the input block empty") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  const IdDataset noisy = collect_id_data(sys, 0.0, 20, 5, RngStream(12));
  const SymMatrix D = uncertainty_matrix(noisy, 0.25, 0.05);
  CHECK(D.mat().bottomRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("uncertainty matrix is linear in the dataset") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  IdDataset data = collect_id_data(sys, 1.0, 10, 5, RngStream(13));
  const SymMatrix D1 = uncertainty_matrix(data, 0.25, 0.05);
  IdDataset doubled = data;
  doubled.samples.insert(doubled.samples.end(), data.samples.begin(), data.samples.end());
  const SymMatrix D2 = uncertainty_matrix(doubled, 0.25, 0.05);
  CHECK((D2.mat() - 2.0 * D1.mat()).cwiseAbs().maxCoeff() <= 1e-12 * D1.mat().norm());
}

TEST_CASE("uncertainty matrix is PSD and grows with appended samples") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  IdDataset data = collect_id_data(sys, 1.0, 10, 5, RngStream(14));
  const SymMatrix D_old = uncertainty_matrix(data, 0.25, 0.05);
  CHECK(min_eig(D_old) >= -1e-10);

  IdDataset more = data;
  const IdDataset extra = collect_id_data(sys, 1.0, 5, 5, RngStream(15));
  more.samples.insert(more.samples.end(), extra.samples.begin(), extra.samples.end());
  const SymMatrix D_new = uncertainty_matrix(more, 0.25, 0.05);
  CHECK(min_eig(SymMatrix(D_new.mat() - D_old.mat(), 1e-6)) >= -1e-10);
}

TEST_CASE("ellipsoid membership") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  const IdDataset data = collect_id_data(sys, 1.0, 20, 5, RngStream(16));
  const auto [A_hat, B_hat] = least_squares_fit(data);
  UncertaintyModel model{A_hat, B_hat, uncertainty_matrix(data, 0.25, 0.05), 0.05};
  CHECK(ellipsoid_contains(model, A_hat, B_hat));  // center

  UncertaintyModel unbounded{A_hat, B_hat, SymMatrix::zero(5), 0.05};
  CHECK(ellipsoid_contains(unbounded, sys.A + Matrix::Constant(3, 3, 5.0), sys.B));
}

TEST_CASE("ellipsoid membership in the scalar case by hand") {
  Matrix one = Matrix::Constant(1, 1, 1.0);
  UncertaintyModel model{one, one, SymMatrix(4.0 * Matrix::Identity(2, 2)), 0.05};
  // A = 1.6 gives X'DX = 0.36 * 4 = 1.44 > 1
  CHECK_FALSE(ellipsoid_contains(model, Matrix::Constant(1, 1, 1.6), one));
  CHECK(ellipsoid_contains(model, Matrix::Constant(1, 1, 1.4), one));
}

TEST_CASE("boundary samples sit on the ellipsoid boundary") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  const IdDataset data = collect_id_data(sys, 1.0, 100, 5, RngStream(17));
  const auto [A_hat, B_hat] = least_squares_fit(data);
  UncertaintyModel model{A_hat, B_hat, uncertainty_matrix(data, 0.25, 0.05), 0.05};

  RngStream rng(18);
  const auto [A1, B1] = boundary_sample(model, rng);
  const auto [A2, B2] = boundary_sample(model, rng);
  CHECK((A1 - A2).norm() > 0.0);

  for (const auto& [A, B] : {std::pair{A1, B1}, std::pair{A2, B2}}) {
    CHECK(ellipsoid_contains(model, A, B));
    const Matrix X = deviation(model, A, B);
    const Matrix G = Matrix::Identity(3, 3) - X.transpose() * model.D.mat() * X;
    CHECK(std::fabs(min_eig(SymMatrix(G, 1e-6))) <= 1e-8);
  }
}

TEST_CASE("isotropic boundary samples have norm 1/sqrt(alpha)") {
  const double alpha = 9.0;
  Matrix one = Matrix::Constant(1, 1, 1.0);
  UncertaintyModel model{one, one, SymMatrix(alpha * Matrix::Identity(2, 2)), 0.05};
  RngStream rng(19);
  const auto [A, B] = boundary_sample(model, rng);
  const Matrix X = deviation(model, A, B);
  CHECK(X.norm() == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-9));
}

TEST_CASE("boundary sampling rejects singular D") {
  Matrix one = Matrix::Constant(1, 1, 1.0);
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 1.0;
  UncertaintyModel model{one, one, SymMatrix(D), 0.05};
  RngStream rng(20);
  CHECK_THROWS_AS(boundary_sample(model, rng), DSingular);
}

TEST_CASE("ellipsoid covers the true plant at roughly the nominal rate") {
  const LTISystem sys = test_systems::mild_plant(0.25);
  int hits = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    const IdDataset data = collect_id_data(sys, 1.0, 100, 5, RngStream(1000 + r));
    const auto [A_hat, B_hat] = least_squares_fit(data);
    UncertaintyModel model{A_hat, B_hat, uncertainty_matrix(data, 0.25, 0.05), 0.05};
    if (ellipsoid_contains(model, sys.A, sys.B)) ++hits;
  }
  CHECK(hits >= static_cast<int>(0.9 * runs));
}

}  // TEST_SUITE
