#include "lqsyn/sysid.hpp"

#include <cmath>
#include <limits>

namespace lqsyn {

void UncertaintyModel::validate() const {
  if (A_hat.rows() != A_hat.cols() || B_hat.rows() != A_hat.rows()) {
    throw DimensionMismatch("UncertaintyModel: inconsistent nominal matrices");
  }
  if (D.dim() != nx() + nu()) {
    throw DimensionMismatch("UncertaintyModel: D must have dim nx + nu");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("UncertaintyModel: delta must lie in (0, 1)");
  }
  const double scale = std::max(1.0, D.mat().cwiseAbs().maxCoeff());
  if (min_eig(D) < -1e-9 * scale) {
    throw NotPsd("UncertaintyModel: D has a negative eigenvalue");
  }
}

std::pair<Matrix, Matrix> least_squares_fit(const IdDataset& data) {
  if (data.count() < 1) throw DimensionMismatch("least_squares_fit: empty dataset");
  const int nx = data.nx();
  const int nu = data.nu();
  const int nreg = nx + nu;
  const int N = data.count();

  Matrix Phi(N, nreg);
  Matrix Y(N, nx);
  for (int i = 0; i < N; ++i) {
    const IdSample& s = data.samples[i];
    if (s.x.size() != nx || s.u.size() != nu || s.x_next.size() != nx) {
      throw DimensionMismatch("least_squares_fit: inconsistent sample dimensions");
    }
    Phi.row(i).head(nx) = s.x.transpose();
    Phi.row(i).tail(nu) = s.u.transpose();
    Y.row(i) = s.x_next.transpose();
  }

  Eigen::ColPivHouseholderQR<Matrix> qr(Phi);
  qr.setThreshold(1e-10);
  if (N < nreg || qr.rank() < nreg) {
    throw RankDeficient("least_squares_fit: regressors have rank " +
                        std::to_string(N < nreg ? N : static_cast<int>(qr.rank())) +
                        " < " + std::to_string(nreg));
  }
  const Matrix Theta = qr.solve(Y);  // [A'; B']
  return {Theta.topRows(nx).transpose(), Theta.bottomRows(nu).transpose()};
}

namespace {

// Regularized incomplete gamma pair (P, Q), P + Q = 1. Series expansion
// below a+1, continued fraction above.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw DomainError("gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

}  // namespace

double chi2_quantile(int dof, double delta) {
  if (dof < 1) throw DomainError("chi2_quantile: dof must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("chi2_quantile: delta must lie in (0, 1)");
  }
  const double a = 0.5 * dof;
  // bracket the root of Q(a, c/2) = delta
  double lo = 0.0;
  double hi = dof + 10.0 * std::sqrt(2.0 * dof) + 10.0;
  while (gamma_q(a, 0.5 * hi) > delta) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-10 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (gamma_q(a, 0.5 * mid) > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SymMatrix uncertainty_matrix(const IdDataset& data, double sigma_w2, double delta) {
  if (!(sigma_w2 > 0.0)) throw DomainError("uncertainty_matrix: sigma_w2 must be > 0");
  if (data.count() < 1) throw DimensionMismatch("uncertainty_matrix: empty dataset");
  const int nx = data.nx();
  const int nu = data.nu();
  const double c_chi = chi2_quantile(nx * nx + nx * nu, delta);

  Matrix sum = Matrix::Zero(nx + nu, nx + nu);
  Vector phi(nx + nu);
  for (const IdSample& s : data.samples) {
    phi.head(nx) = s.x;
    phi.tail(nu) = s.u;
    sum.noalias() += phi * phi.transpose();
  }
  return SymMatrix(sum / (c_chi * sigma_w2), 1e-9);
}

Matrix deviation(const UncertaintyModel& model, const Matrix& A, const Matrix& B) {
  if (A.rows() != model.nx() || A.cols() != model.nx() || B.rows() != model.nx() ||
      B.cols() != model.nu()) {
    throw DimensionMismatch("deviation: plant dimensions do not match model");
  }
  Matrix X(model.nx() + model.nu(), model.nx());
  X.topRows(model.nx()) = (model.A_hat - A).transpose();
  X.bottomRows(model.nu()) = (model.B_hat - B).transpose();
  return X;
}

bool ellipsoid_contains(const UncertaintyModel& model, const Matrix& A, const Matrix& B) {
  const Matrix X = deviation(model, A, B);
  const Matrix M = Matrix::Identity(model.nx(), model.nx()) -
                   X.transpose() * model.D.mat() * X;
  return min_eig(SymMatrix(0.5 * (M + M.transpose()))) >= -1e-9;
}

std::pair<Matrix, Matrix> boundary_sample(const UncertaintyModel& model, RngStream& rng) {
  model.validate();
  const int nx = model.nx();
  const int nu = model.nu();
  const double d_max = max_eig(model.D);
  if (min_eig(model.D) <= 1e-12 * std::max(1.0, d_max)) {
    throw DSingular("boundary_sample: D is singular, boundary unbounded");
  }
  Matrix X0(nx + nu, nx);
  double lam = 0.0;
  do {
    for (int i = 0; i < X0.rows(); ++i) X0.row(i) = rng.normal_vec(nx).transpose();
    const Matrix M = X0.transpose() * model.D.mat() * X0;
    lam = max_eig(SymMatrix(0.5 * (M + M.transpose())));
  } while (lam <= 0.0);
  const Matrix X = X0 / std::sqrt(lam);
  return {model.A_hat - X.topRows(nx).transpose(),
          model.B_hat - X.bottomRows(nu).transpose()};
}

}  // namespace lqsyn
