#ifndef LQSYN_TESTS_TEST_SYSTEMS_HPP
#define LQSYN_TESTS_TEST_SYSTEMS_HPP

#include "lqsyn/lti.hpp"
#include "lqsyn/policy_eval.hpp"

namespace lqsyn::test_systems {

// Well-damped 3-state / 2-input benchmark plant.
inline LTISystem mild_plant(double sigma_w2) {
  Matrix A(3, 3), B(3, 2);
  A << 0.18, 0.1, 0.0,
       0.0, 0.18, 0.04,
       0.0, -0.04, 0.16;
  B << 0.0, 1.0,
       0.6, 0.0,
       0.0, 0.6;
  return {A, B, sigma_w2};
}

// Variant with all eigenvalues close to the unit circle and a weakly
// controllable least-damped mode.
inline LTISystem marginal_plant(double sigma_w2) {
  Matrix A(3, 3), B(3, 2);
  A << 0.9, 0.5, 0.0,
       0.0, 0.9, 0.2,
       0.0, -0.2, 0.8;
  B << 0.0, 0.1,
       0.6, 0.0,
       0.0, 0.6;
  return {A, B, sigma_w2};
}

// Stage costs used with the benchmark plants.
inline CostMatrices bench_cost() {
  Matrix R = Matrix::Zero(2, 2);
  R.diagonal() << 10.0, 1.0;
  return CostMatrices(SymMatrix::identity(3), SymMatrix(R));
}

}  // namespace lqsyn::test_systems

#endif
