#ifndef LQSYN_RICCATI_HPP
#define LQSYN_RICCATI_HPP

#include <vector>

#include "lqsyn/linalg.hpp"
#include "lqsyn/policy.hpp"

namespace lqsyn {

/// Backward-recursion solution of the finite-horizon LQR for known
/// dynamics. value(t) is defined for t in [1, T] with value(T) = Q;
/// gain(t) for t in [1, T-1], in the u = K x sign convention (the minus
/// is folded into K).
class RiccatiSolution {
 public:
  RiccatiSolution(std::vector<SymMatrix> values, std::vector<Matrix> gains);

  int horizon() const { return static_cast<int>(values_.size()); }
  const SymMatrix& value(int t) const;  // t in [1, T]
  const Matrix& gain(int t) const;      // t in [1, T-1]

  /// As a simulation policy over T steps: K[0] = 0, K[t] = gain(t), S = 0.
  Policy to_policy() const;

 private:
  std::vector<SymMatrix> values_;  // values_[t-1] holds value(t)
  std::vector<Matrix> gains_;      // gains_[t-1] holds gain(t)
};

/// Solve the Riccati difference recursion backward from X_T = Q:
///   K_t = -(R + B'X_{t+1}B)^{-1} B'X_{t+1}A
///   X_t = Q + A'X_{t+1}A - A'X_{t+1}B (R + B'X_{t+1}B)^{-1} B'X_{t+1}A
RiccatiSolution drde_solve(const Matrix& A, const Matrix& B, const SymMatrix& Q,
                           const SymMatrix& R, int T);

/// Closed-form expected cost under the optimal gains:
/// sigma_w2 * sum_{t=1}^{T-1} trace(X_{t+1}).
double drde_cost(const RiccatiSolution& sol, double sigma_w2);

}  // namespace lqsyn

#endif
