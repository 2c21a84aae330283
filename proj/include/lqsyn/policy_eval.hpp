#ifndef LQSYN_POLICY_EVAL_HPP
#define LQSYN_POLICY_EVAL_HPP

#include <optional>
#include <vector>

#include "lqsyn/linalg.hpp"
#include "lqsyn/lti.hpp"
#include "lqsyn/policy.hpp"

namespace lqsyn {

/// Quadratic stage costs with cached PSD square roots.
struct CostMatrices {
  SymMatrix Q;
  SymMatrix R;
  Matrix Q_sqrt;
  Matrix R_sqrt;

  CostMatrices(const SymMatrix& q, const SymMatrix& r);
};

/// Second moments P_t = E[x_t x_t'] of the closed-loop state, t = 0..T.
/// P_0 = 0 because rollouts start at the origin.
struct CovarianceTrajectory {
  std::vector<SymMatrix> P;
  int horizon() const { return static_cast<int>(P.size()) - 1; }
};

/// Expected cost with its per-step split: j_x[i] is the state+feedback
/// contribution at step i+1 (the last entry is the terminal state cost),
/// j_e[i] the excitation contribution at step i+1. j_total is their sum.
struct CostReport {
  double j_total = 0.0;
  std::vector<double> j_x;
  std::vector<double> j_e;
  std::optional<double> stderr_estimate;
};

/// Propagate state covariance through the closed loop:
///   P_{t+1} = (A + B K_t) P_t (A + B K_t)' + sigma_w2 I + B S_t B'.
CovarianceTrajectory propagate_covariance(const LTISystem& sys, const Policy& policy);

/// Exact expected cost from the covariance trajectory:
///   J = sum_{t=1}^{T-1} [ trace((Q + K_t'R K_t) P_t) + trace(R S_t) ]
///       + trace(Q P_T).
CostReport lemma1_cost(const CostMatrices& cm, const Policy& policy,
                       const CovarianceTrajectory& cov);

/// Monte Carlo estimate of the same expectation from n_real independent
/// rollouts. Realization r draws from rng.substream(r); results are
/// bit-reproducible regardless of thread count.
CostReport monte_carlo_cost(const LTISystem& sys, const Policy& policy,
                            const CostMatrices& cm, int n_real, const RngStream& rng,
                            bool parallel = true);

/// Straight-loop reference for monte_carlo_cost; must agree bit-exactly.
CostReport monte_carlo_cost_serial(const LTISystem& sys, const Policy& policy,
                                   const CostMatrices& cm, int n_real,
                                   const RngStream& rng);

}  // namespace lqsyn

#endif
