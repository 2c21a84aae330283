#include "lqsyn/policy_eval.hpp"

#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lqsyn {

CostMatrices::CostMatrices(const SymMatrix& q, const SymMatrix& r)
    : Q(q), R(r), Q_sqrt(psd_sqrt(q)), R_sqrt(psd_sqrt(r)) {}

CovarianceTrajectory propagate_covariance(const LTISystem& sys, const Policy& policy) {
  sys.validate();
  policy.validate();
  if (policy.nx() != sys.nx() || policy.nu() != sys.nu()) {
    throw DimensionMismatch("propagate_covariance: policy does not match system");
  }
  const int T = policy.horizon();
  const int nx = sys.nx();
  const Matrix noise = sys.sigma_w2 * Matrix::Identity(nx, nx);

  CovarianceTrajectory cov;
  cov.P.reserve(T + 1);
  cov.P.push_back(SymMatrix::zero(nx));
  Matrix P = Matrix::Zero(nx, nx);
  for (int t = 0; t < T; ++t) {
    const Matrix Acl = sys.A + sys.B * policy.K[t];
    P = Acl * P * Acl.transpose() + noise + sys.B * policy.S[t] * sys.B.transpose();
    P = 0.5 * (P + P.transpose());
    cov.P.push_back(SymMatrix(P, 1e-9));
  }
  return cov;
}

CostReport lemma1_cost(const CostMatrices& cm, const Policy& policy,
                       const CovarianceTrajectory& cov) {
  const int T = policy.horizon();
  if (cov.horizon() != T) {
    throw DimensionMismatch("lemma1_cost: covariance horizon does not match policy");
  }
  CostReport rep;
  rep.j_x.reserve(T);
  rep.j_e.reserve(T - 1);
  for (int t = 1; t <= T - 1; ++t) {
    const Matrix& Kt = policy.K[t];
    const Matrix M = cm.Q.mat() + Kt.transpose() * cm.R.mat() * Kt;
    rep.j_x.push_back((M * cov.P[t].mat()).trace());
    rep.j_e.push_back((cm.R.mat() * policy.S[t]).trace());
  }
  rep.j_x.push_back((cm.Q.mat() * cov.P[T].mat()).trace());
  rep.j_total = std::accumulate(rep.j_x.begin(), rep.j_x.end(), 0.0) +
                std::accumulate(rep.j_e.begin(), rep.j_e.end(), 0.0);
  return rep;
}

namespace {

double trajectory_cost(const Trajectory& traj, const CostMatrices& cm, int T) {
  double c = 0.0;
  for (int t = 1; t <= T - 1; ++t) {
    c += traj.states[t].dot(cm.Q.mat() * traj.states[t]);
    c += traj.inputs[t].dot(cm.R.mat() * traj.inputs[t]);
  }
  c += traj.states[T].dot(cm.Q.mat() * traj.states[T]);
  return c;
}

CostReport summarize(const std::vector<double>& costs) {
  const int n = static_cast<int>(costs.size());
  const double mean = std::accumulate(costs.begin(), costs.end(), 0.0) / n;
  double ss = 0.0;
  for (double c : costs) ss += (c - mean) * (c - mean);
  const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  CostReport rep;
  rep.j_total = mean;
  rep.stderr_estimate = sd / std::sqrt(static_cast<double>(n));
  return rep;
}

}  // namespace

CostReport monte_carlo_cost(const LTISystem& sys, const Policy& policy,
                            const CostMatrices& cm, int n_real, const RngStream& rng,
                            bool parallel) {
  if (n_real < 2) throw DimensionMismatch("monte_carlo_cost: need n_real >= 2");
  const int T = policy.horizon();
  std::vector<double> costs(n_real);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int r = 0; r < n_real; ++r) {
    const Trajectory traj =
        rollout(sys, policy, T, rng.substream(static_cast<std::uint64_t>(r)));
    costs[r] = trajectory_cost(traj, cm, T);
  }
  (void)parallel;
  return summarize(costs);
}

CostReport monte_carlo_cost_serial(const LTISystem& sys, const Policy& policy,
                                   const CostMatrices& cm, int n_real,
                                   const RngStream& rng) {
  if (n_real < 2) throw DimensionMismatch("monte_carlo_cost: need n_real >= 2");
  const int T = policy.horizon();
  std::vector<double> costs;
  costs.reserve(n_real);
  for (int r = 0; r < n_real; ++r) {
    const Trajectory traj =
        rollout(sys, policy, T, rng.substream(static_cast<std::uint64_t>(r)));
    costs.push_back(trajectory_cost(traj, cm, T));
  }
  return summarize(costs);
}

}  // namespace lqsyn
