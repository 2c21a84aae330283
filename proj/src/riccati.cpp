#include "lqsyn/riccati.hpp"

namespace lqsyn {

RiccatiSolution::RiccatiSolution(std::vector<SymMatrix> values, std::vector<Matrix> gains)
    : values_(std::move(values)), gains_(std::move(gains)) {
  if (values_.size() != gains_.size() + 1 || values_.empty()) {
    throw DimensionMismatch("RiccatiSolution: expected T values and T-1 gains");
  }
}

const SymMatrix& RiccatiSolution::value(int t) const {
  if (t < 1 || t > horizon()) throw DimensionMismatch("RiccatiSolution::value: t out of range");
  return values_[t - 1];
}

const Matrix& RiccatiSolution::gain(int t) const {
  if (t < 1 || t >= horizon()) throw DimensionMismatch("RiccatiSolution::gain: t out of range");
  return gains_[t - 1];
}

Policy RiccatiSolution::to_policy() const {
  const int T = horizon();
  const int nx = static_cast<int>(gains_[0].cols());
  const int nu = static_cast<int>(gains_[0].rows());
  Policy p = Policy::zero(nx, nu, T);
  for (int t = 1; t < T; ++t) p.K[t] = gain(t);
  return p;
}

RiccatiSolution drde_solve(const Matrix& A, const Matrix& B, const SymMatrix& Q,
                           const SymMatrix& R, int T) {
  const int nx = static_cast<int>(A.rows());
  const int nu = static_cast<int>(B.cols());
  if (A.cols() != nx || B.rows() != nx || Q.dim() != nx || R.dim() != nu || T < 2) {
    throw DimensionMismatch("drde_solve: inconsistent dimensions or T < 2");
  }

  std::vector<SymMatrix> X(T, Q);
  std::vector<Matrix> K(T - 1, Matrix::Zero(nu, nx));
  for (int t = T - 1; t >= 1; --t) {
    const Matrix& Xn = X[t].mat();  // X_{t+1}
    const Matrix G = R.mat() + B.transpose() * Xn * B;
    LowerTriangularFactor Gf;
    try {
      Gf = cholesky(SymMatrix(0.5 * (G + G.transpose())));
    } catch (const NotPositiveDefinite&) {
      throw SingularInnovation("drde_solve: R + B'X_{t+1}B not positive definite at t=" +
                               std::to_string(t));
    }
    const Matrix BXA = B.transpose() * Xn * A;
    // G K = -B'X_{t+1}A solved through the Cholesky factor
    const Matrix Kt = -Gf.L.transpose()
                           .triangularView<Eigen::Upper>()
                           .solve(Gf.L.triangularView<Eigen::Lower>().solve(BXA));
    const Matrix Xt = Q.mat() + A.transpose() * Xn * A + A.transpose() * Xn * B * Kt;
    K[t - 1] = Kt;
    X[t - 1] = SymMatrix(0.5 * (Xt + Xt.transpose()), 1e-9);
  }
  return RiccatiSolution(std::move(X), std::move(K));
}

double drde_cost(const RiccatiSolution& sol, double sigma_w2) {
  double tr = 0.0;
  for (int t = 1; t <= sol.horizon() - 1; ++t) tr += sol.value(t + 1).mat().trace();
  return sigma_w2 * tr;
}

}  // namespace lqsyn
