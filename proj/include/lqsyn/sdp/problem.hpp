#ifndef LQSYN_SDP_PROBLEM_HPP
#define LQSYN_SDP_PROBLEM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lqsyn/sdp/expr.hpp"

namespace lqsyn::sdp {

/// Handle to a registered matrix (or scalar) decision variable. Symmetric
/// variables register the upper triangle only; general ones register every
/// entry. Handles from separate calls own disjoint scalar index ranges.
struct VarHandle {
  int offset = 0;
  int rows = 0;
  int cols = 0;
  bool symmetric = false;

  int count() const { return symmetric ? rows * (rows + 1) / 2 : rows * cols; }
  int scalar_index(int r, int c) const;
};

/// One LMI block in compiled form: F0 + sum_i x_i F_i required PSD, with
/// each F_i stored as upper-triangle triplets of a symmetric matrix.
struct CompiledBlock {
  struct Triplet {
    int r, c;
    double v;
  };
  int dim = 0;
  Matrix F0;
  std::vector<int> vars;                        // ascending global indices
  std::vector<std::vector<Triplet>> coeffs;     // parallel to vars
  std::string label;
};

/// Linear-objective SDP over a product of PSD blocks:
///   minimize c'x  s.t.  F_b0 + sum_i x_i F_bi >= 0 for every block b.
/// Blocks are compiled from affine symmetric matrix expressions as they
/// are added.
class Problem {
 public:
  VarHandle add_matrix_var(int rows, int cols, bool symmetric);
  VarHandle add_scalar_var();

  /// Expression view of a registered variable.
  MatExpr var(const VarHandle& h) const;
  /// Affine view of a scalar (1x1) variable.
  LinExpr scalar(const VarHandle& h) const;

  /// Add the constraint expr >= 0 (PSD). The expression must be square,
  /// affine, and symmetric; asymmetry beyond roundoff is an error.
  int add_lmi_block(const MatExpr& expr, std::string label = {});

  /// Scalar bound x >= lb as a 1x1 block.
  void add_lower_bound(const VarHandle& scalar_var, double lb);

  void set_objective(const LinExpr& obj);

  int n_vars() const { return n_vars_; }
  int n_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<CompiledBlock>& blocks() const { return blocks_; }
  const LinExpr& objective() const { return objective_; }
  Vector objective_vector() const;

  /// Value of a variable at a solution vector.
  Matrix value(const VarHandle& h, const Vector& x) const;

  /// Text dump of the standard form (block sizes and nonzero triplets),
  /// for cross-checking against external solvers.
  void dump(std::ostream& os) const;

 private:
  int n_vars_ = 0;
  std::vector<CompiledBlock> blocks_;
  LinExpr objective_;
};

}  // namespace lqsyn::sdp

#endif
