#ifndef LQSYN_POLICY_HPP
#define LQSYN_POLICY_HPP

#include <vector>

#include "lqsyn/linalg.hpp"

namespace lqsyn {

/// Time-varying affine-noise feedback law u_t = K[t] x_t + e_t with
/// e_t ~ N(0, S[t]). Entries are indexed by simulation step, starting at
/// t = 0. Controllers synthesized for a regulation horizon keep K[0] and
/// S[0] zero: the state starts at the origin, so the first step carries
/// no information to act on.
struct Policy {
  std::vector<Matrix> K;  // n_u x n_x gains
  std::vector<Matrix> S;  // n_u x n_u excitation covariances (PSD)

  int horizon() const { return static_cast<int>(K.size()); }
  int nx() const { return K.empty() ? 0 : static_cast<int>(K[0].cols()); }
  int nu() const { return K.empty() ? 0 : static_cast<int>(K[0].rows()); }

  /// All-zero policy over `horizon` steps.
  static Policy zero(int nx, int nu, int horizon);

  /// Pure random excitation u_t ~ N(0, sigma_u2 I) at every step.
  static Policy random_excitation(int nx, int nu, int horizon, double sigma_u2);

  void validate() const;  // consistent lengths and dimensions
};

}  // namespace lqsyn

#endif
