#include "lqsyn/lti.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lqsyn {

void LTISystem::validate() const {
  if (A.rows() != A.cols() || A.rows() < 1) {
    throw DimensionMismatch("LTISystem: A must be square");
  }
  if (B.rows() != A.rows() || B.cols() < 1) {
    throw DimensionMismatch("LTISystem: B row count must match A");
  }
  if (!(sigma_w2 >= 0.0)) {
    throw DimensionMismatch("LTISystem: sigma_w2 must be >= 0");
  }
}

Vector step(const LTISystem& sys, const Vector& x, const Vector& u, const Vector& w) {
  if (x.size() != sys.nx() || u.size() != sys.nu() || w.size() != sys.nx()) {
    throw DimensionMismatch("step: state/input/noise dimensions do not match system");
  }
  return sys.A * x + sys.B * u + w;
}

Vector gaussian_vec(const SymMatrix& cov, RngStream& rng) {
  const Matrix factor = psd_sqrt(cov);
  return factor * rng.normal_vec(cov.dim());
}

namespace {

// Per-step excitation factors, computed once per policy instead of once
// per sampled input.
std::vector<Matrix> excitation_factors(const Policy& policy, int T) {
  std::vector<Matrix> L(T);
  for (int t = 0; t < T; ++t) L[t] = psd_sqrt(SymMatrix(policy.S[t]));
  return L;
}

Trajectory rollout_with_factors(const LTISystem& sys, const Policy& policy,
                                const std::vector<Matrix>& L, int T, RngStream& rng) {
  const int nx = sys.nx();
  const int nu = sys.nu();
  const double sigma_w = std::sqrt(sys.sigma_w2);

  Trajectory traj;
  traj.states.reserve(T + 1);
  traj.inputs.reserve(T);
  Vector x = Vector::Zero(nx);
  traj.states.push_back(x);
  for (int t = 0; t < T; ++t) {
    const Vector e = L[t] * rng.normal_vec(nu);
    const Vector u = policy.K[t] * x + e;
    const Vector w = sigma_w * rng.normal_vec(nx);
    x = sys.A * x + sys.B * u + w;
    traj.inputs.push_back(u);
    traj.states.push_back(x);
  }
  return traj;
}

}  // namespace

Trajectory rollout(const LTISystem& sys, const Policy& policy, int T, RngStream rng) {
  sys.validate();
  policy.validate();
  if (policy.horizon() < T) {
    throw DimensionMismatch("rollout: policy horizon shorter than requested T");
  }
  if (policy.nx() != sys.nx() || policy.nu() != sys.nu()) {
    throw DimensionMismatch("rollout: policy dimensions do not match system");
  }
  const std::vector<Matrix> L = excitation_factors(policy, T);
  return rollout_with_factors(sys, policy, L, T, rng);
}

namespace {

IdDataset collect_id_data_impl(const LTISystem& sys, double sigma_u2, int n_rollouts,
                               int T_r, const RngStream& rng, bool parallel) {
  sys.validate();
  if (n_rollouts < 1 || T_r < 2) {
    throw DimensionMismatch("collect_id_data: need n_rollouts >= 1 and T_r >= 2");
  }
  const int steps = T_r - 1;  // a length-T_r rollout visits states x_0..x_{T_r-1}
  const Policy excite = Policy::random_excitation(sys.nx(), sys.nu(), steps, sigma_u2);
  const std::vector<Matrix> L = excitation_factors(excite, steps);

  std::vector<std::vector<IdSample>> per_rollout(n_rollouts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int k = 0; k < n_rollouts; ++k) {
    RngStream local = rng.substream(static_cast<std::uint64_t>(k));
    const Trajectory traj = rollout_with_factors(sys, excite, L, steps, local);
    std::vector<IdSample>& out = per_rollout[k];
    out.reserve(steps);
    for (int t = 0; t < steps; ++t) {
      out.push_back({traj.states[t], traj.inputs[t], traj.states[t + 1]});
    }
  }
  (void)parallel;

  IdDataset data;
  data.samples.reserve(static_cast<std::size_t>(n_rollouts) * steps);
  for (auto& chunk : per_rollout) {
    for (auto& s : chunk) data.samples.push_back(std::move(s));
  }
  return data;
}

}  // namespace

IdDataset collect_id_data(const LTISystem& sys, double sigma_u2, int n_rollouts,
                          int T_r, const RngStream& rng, bool parallel) {
  return collect_id_data_impl(sys, sigma_u2, n_rollouts, T_r, rng, parallel);
}

IdDataset collect_id_data_serial(const LTISystem& sys, double sigma_u2,
                                 int n_rollouts, int T_r, const RngStream& rng) {
  sys.validate();
  if (n_rollouts < 1 || T_r < 2) {
    throw DimensionMismatch("collect_id_data: need n_rollouts >= 1 and T_r >= 2");
  }
  const int steps = T_r - 1;
  const Policy excite = Policy::random_excitation(sys.nx(), sys.nu(), steps, sigma_u2);
  IdDataset data;
  for (int k = 0; k < n_rollouts; ++k) {
    const Trajectory traj =
        rollout(sys, excite, steps, rng.substream(static_cast<std::uint64_t>(k)));
    for (int t = 0; t < steps; ++t) {
      data.samples.push_back({traj.states[t], traj.inputs[t], traj.states[t + 1]});
    }
  }
  return data;
}

}  // namespace lqsyn
