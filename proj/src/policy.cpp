#include "lqsyn/policy.hpp"

namespace lqsyn {

Policy Policy::zero(int nx, int nu, int horizon) {
  Policy p;
  p.K.assign(horizon, Matrix::Zero(nu, nx));
  p.S.assign(horizon, Matrix::Zero(nu, nu));
  return p;
}

Policy Policy::random_excitation(int nx, int nu, int horizon, double sigma_u2) {
  Policy p = zero(nx, nu, horizon);
  for (auto& s : p.S) s = sigma_u2 * Matrix::Identity(nu, nu);
  return p;
}

void Policy::validate() const {
  if (K.size() != S.size()) {
    throw DimensionMismatch("Policy: gain and excitation sequences differ in length");
  }
  for (std::size_t t = 0; t < K.size(); ++t) {
    if (K[t].rows() != K[0].rows() || K[t].cols() != K[0].cols()) {
      throw DimensionMismatch("Policy: inconsistent gain dimensions at step " +
                              std::to_string(t));
    }
    if (S[t].rows() != K[0].rows() || S[t].cols() != K[0].rows()) {
      throw DimensionMismatch("Policy: inconsistent excitation dimensions at step " +
                              std::to_string(t));
    }
  }
}

}  // namespace lqsyn
