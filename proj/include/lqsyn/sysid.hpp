#ifndef LQSYN_SYSID_HPP
#define LQSYN_SYSID_HPP

#include <utility>

#include "lqsyn/linalg.hpp"
#include "lqsyn/lti.hpp"
#include "lqsyn/rng.hpp"

namespace lqsyn {

/// Nominal model plus the ellipsoidal set of plants compatible with the
/// identification data at confidence 1-delta. A plant (A, B) belongs to
/// the set when the stacked deviation X = [(A_hat-A)'; (B_hat-B)']
/// satisfies X' D X <= I.
struct UncertaintyModel {
  Matrix A_hat;
  Matrix B_hat;
  SymMatrix D;
  double delta = 0.05;

  int nx() const { return static_cast<int>(A_hat.rows()); }
  int nu() const { return static_cast<int>(B_hat.cols()); }
  void validate() const;
};

/// Least-squares fit of (A, B) from transition triples. Throws
/// RankDeficient when the stacked regressors [x; u] do not have full
/// column rank.
std::pair<Matrix, Matrix> least_squares_fit(const IdDataset& data);

/// Upper critical value c with P(chi2_dof > c) = delta, found by
/// bisection on the regularized incomplete gamma function.
double chi2_quantile(int dof, double delta);

/// Ellipsoid shape matrix from the regressor second moments:
///   D = 1/(c_chi sigma_w2) * sum_t [x_t; u_t][x_t; u_t]'
/// with c_chi the chi-squared critical value at nx^2 + nx*nu degrees of
/// freedom.
SymMatrix uncertainty_matrix(const IdDataset& data, double sigma_w2, double delta);

/// Stacked deviation X = [(A_hat-A)'; (B_hat-B)'].
Matrix deviation(const UncertaintyModel& model, const Matrix& A, const Matrix& B);

/// Membership test: min_eig(I - X'DX) >= -1e-9.
bool ellipsoid_contains(const UncertaintyModel& model, const Matrix& A, const Matrix& B);

/// Random plant on the boundary of the uncertainty set: a random
/// deviation direction scaled so the largest eigenvalue of X'DX is
/// exactly one. Requires D positive definite (throws DSingular).
std::pair<Matrix, Matrix> boundary_sample(const UncertaintyModel& model, RngStream& rng);

}  // namespace lqsyn

#endif
