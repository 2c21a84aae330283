#ifndef LQSYN_LTI_HPP
#define LQSYN_LTI_HPP

#include <vector>

#include "lqsyn/linalg.hpp"
#include "lqsyn/policy.hpp"
#include "lqsyn/rng.hpp"

namespace lqsyn {

/// Discrete-time plant x_{t+1} = A x_t + B u_t + w_t with
/// w_t ~ N(0, sigma_w2 I) and x_0 = 0.
struct LTISystem {
  Matrix A;
  Matrix B;
  double sigma_w2 = 0.0;

  int nx() const { return static_cast<int>(A.rows()); }
  int nu() const { return static_cast<int>(B.cols()); }
  void validate() const;
};

struct Trajectory {
  std::vector<Vector> states;  // x_0 .. x_T
  std::vector<Vector> inputs;  // u_0 .. u_{T-1}
};

struct IdSample {
  Vector x;
  Vector u;
  Vector x_next;
};

struct IdDataset {
  std::vector<IdSample> samples;

  int count() const { return static_cast<int>(samples.size()); }
  int nx() const { return samples.empty() ? 0 : static_cast<int>(samples[0].x.size()); }
  int nu() const { return samples.empty() ? 0 : static_cast<int>(samples[0].u.size()); }
};

/// One plant step: A x + B u + w.
Vector step(const LTISystem& sys, const Vector& x, const Vector& u, const Vector& w);

/// Sample from N(0, cov) through a PSD-safe factor of cov.
Vector gaussian_vec(const SymMatrix& cov, RngStream& rng);

/// Simulate the closed loop from x_0 = 0 for T steps. Deterministic in rng.
Trajectory rollout(const LTISystem& sys, const Policy& policy, int T, RngStream rng);

/// Run `n_rollouts` independent excitation rollouts of length T_r under
/// u_t ~ N(0, sigma_u2 I) and collect the (x_t, u_t, x_{t+1}) transition
/// triples. Triples never span rollout boundaries. Rollout k draws from
/// rng.substream(k), so the result is reproducible and scheduling-free.
IdDataset collect_id_data(const LTISystem& sys, double sigma_u2, int n_rollouts,
                          int T_r, const RngStream& rng, bool parallel = true);

/// Plain-loop reference for collect_id_data; must agree bit-exactly.
IdDataset collect_id_data_serial(const LTISystem& sys, double sigma_u2,
                                 int n_rollouts, int T_r, const RngStream& rng);

}  // namespace lqsyn

#endif
