#ifndef LQSYN_SDP_SOLVER_HPP
#define LQSYN_SDP_SOLVER_HPP

#include <string>
#include <vector>

#include "lqsyn/sdp/problem.hpp"

namespace lqsyn::sdp {

enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIter };

std::string to_string(SolveStatus s);

struct SolverOptions {
  double feas_tol = 1e-7;
  double gap_tol = 1e-7;
  int max_iter = 200;
  bool verbose = false;
  bool parallel = true;  // OpenMP Schur-complement assembly
};

struct Solution {
  Vector x;
  double objective_value = 0.0;
  SolveStatus status = SolveStatus::MaxIter;
  /// max over blocks of max(0, -lambda_min(F_b(x))) / (1 + ||F_b0||_F)
  double max_constraint_violation = 0.0;
  /// trace(S Z) / (1 + |primal| + |dual|) at exit; nonnegative
  double duality_gap = 0.0;
  int iterations = 0;
  std::string message;
};

/// Primal-dual path-following solve (HKM direction, Mehrotra
/// predictor-corrector) of min c'x s.t. F_b(x) >= 0 per block. Returns
/// Optimal within tolerances, a certificate-backed Infeasible/Unbounded,
/// or MaxIter with the best iterate found. Throws NumericalBreakdown if
/// the Schur system cannot be factored.
Solution solve(const Problem& p, const SolverOptions& opts = {});

namespace detail {

/// Schur complement of the HKM Newton system,
///   M_ij = sum_b trace(F_bi Sinv_b F_bj Z_b),
/// accumulated on the lower triangle of M (which must be presized n x n).
/// Work is split across rows inside each block, so thread count does not
/// change the result.
void assemble_schur(const std::vector<CompiledBlock>& blocks,
                    const std::vector<Matrix>& Sinv, const std::vector<Matrix>& Z,
                    Matrix& M, bool parallel);

/// Dense-arithmetic reference for assemble_schur (small problems only).
void assemble_schur_reference(const std::vector<CompiledBlock>& blocks,
                              const std::vector<Matrix>& Sinv,
                              const std::vector<Matrix>& Z, Matrix& M);

}  // namespace detail

}  // namespace lqsyn::sdp

#endif
