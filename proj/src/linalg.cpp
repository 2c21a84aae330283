#include "lqsyn/linalg.hpp"

#include <cmath>

namespace lqsyn {

SymMatrix::SymMatrix(const Matrix& m, double asym_tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch("SymMatrix: input must be square with dim >= 1");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > asym_tol * scale) {
    throw DimensionMismatch("SymMatrix: input asymmetry " + std::to_string(asym) +
                            " exceeds tolerance");
  }
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::identity(int n) { return SymMatrix(Matrix::Identity(n, n)); }

SymMatrix SymMatrix::zero(int n) { return SymMatrix(Matrix::Zero(n, n)); }

LowerTriangularFactor cholesky(const SymMatrix& m) {
  const int n = m.dim();
  const Matrix& a = m.mat();
  Matrix L = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j) - L.row(j).head(j).squaredNorm();
    if (d <= 0.0) {
      throw NotPositiveDefinite(
          "cholesky: pivot " + std::to_string(j) + " is " + std::to_string(d), j);
    }
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      L(i, j) = (a(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
    }
  }
  return {std::move(L)};
}

EigDecomposition sym_eig(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("sym_eig: eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

double min_eig(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("min_eig: eigensolver did not converge");
  }
  return es.eigenvalues()(0);
}

double max_eig(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("max_eig: eigensolver did not converge");
  }
  return es.eigenvalues()(m.dim() - 1);
}

Matrix psd_sqrt(const SymMatrix& m, double clamp_tol) {
  EigDecomposition eig = sym_eig(m);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  Vector lam = eig.values;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) < -clamp_tol * scale) {
      throw NotPsd("psd_sqrt: eigenvalue " + std::to_string(lam(i)) + " is negative");
    }
    lam(i) = std::max(lam(i), 0.0);
  }
  return eig.vectors * lam.cwiseSqrt().asDiagonal() * eig.vectors.transpose();
}

Matrix psd_project(const SymMatrix& m) {
  EigDecomposition eig = sym_eig(m);
  Vector lam = eig.values.cwiseMax(0.0);
  return eig.vectors * lam.asDiagonal() * eig.vectors.transpose();
}

}  // namespace lqsyn
