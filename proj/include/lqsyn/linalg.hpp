#ifndef LQSYN_LINALG_HPP
#define LQSYN_LINALG_HPP

#include <Eigen/Dense>

#include "lqsyn/errors.hpp"

namespace lqsyn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. Construction rejects inputs whose
/// asymmetry exceeds 1e-12 relative to the entry scale and stores the
/// symmetrized average (m + m^T)/2, so roundoff drift from iterative
/// algorithms is absorbed instead of accumulating.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m, double asym_tol = 1e-12);

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  SymMatrix() = default;
  Matrix m_;
};

struct LowerTriangularFactor {
  Matrix L;  // m = L * L^T
};

struct EigDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns, same order as values
};

/// Cholesky factor of a positive definite matrix. Throws
/// NotPositiveDefinite carrying the failing pivot row otherwise.
LowerTriangularFactor cholesky(const SymMatrix& m);

/// Full symmetric eigendecomposition, eigenvalues ascending.
EigDecomposition sym_eig(const SymMatrix& m);

double min_eig(const SymMatrix& m);
double max_eig(const SymMatrix& m);

/// Square root of a PSD matrix via eigendecomposition. Eigenvalues in
/// [-clamp_tol, 0) are clamped to zero (boundary iterates from
/// optimization land there); anything more negative throws NotPsd.
Matrix psd_sqrt(const SymMatrix& m, double clamp_tol = 1e-10);

/// Nearest-PSD projection: eigenvalues clamped at zero.
Matrix psd_project(const SymMatrix& m);

}  // namespace lqsyn

#endif
