#ifndef LQSYN_SDP_EXPR_HPP
#define LQSYN_SDP_EXPR_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "lqsyn/linalg.hpp"

namespace lqsyn::sdp {

/// Affine scalar expression c0 + sum_i coeff_i * x_i over the scalar
/// decision variables of a Problem. Terms are kept sorted by variable
/// index and merged.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(double constant) : c0_(constant) {}
  static LinExpr term(int var, double coeff);

  double constant() const { return c0_; }
  const std::vector<std::pair<int, double>>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(double s);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(double s, LinExpr a) { return a *= s; }
  friend LinExpr operator*(LinExpr a, double s) { return a *= s; }
  LinExpr operator-() const;

 private:
  double c0_ = 0.0;
  std::vector<std::pair<int, double>> terms_;
};

/// Dense matrix whose entries are affine expressions. Supports the
/// composition needed to assemble LMI blocks: addition, multiplication
/// by constant matrices, transposition, scalar-variable scaling of a
/// constant matrix, and block stacking. Multiplying two
/// variable-containing expressions throws NonAffine.
class MatExpr {
 public:
  MatExpr(int rows, int cols);
  static MatExpr constant(const Matrix& m);
  static MatExpr zero(int rows, int cols) { return MatExpr(rows, cols); }
  static MatExpr identity(int n) { return constant(Matrix::Identity(n, n)); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const LinExpr& at(int r, int c) const { return e_[r * cols_ + c]; }
  LinExpr& at(int r, int c) { return e_[r * cols_ + c]; }

  bool is_constant() const;
  Matrix constant_value() const;  // requires is_constant()

  MatExpr transpose() const;
  MatExpr& operator+=(const MatExpr& o);
  MatExpr& operator-=(const MatExpr& o);
  friend MatExpr operator+(MatExpr a, const MatExpr& b) { return a += b; }
  friend MatExpr operator-(MatExpr a, const MatExpr& b) { return a -= b; }
  friend MatExpr operator*(double s, MatExpr a);
  friend MatExpr operator*(const Matrix& m, const MatExpr& e);
  friend MatExpr operator*(const MatExpr& e, const Matrix& m);
  /// General product; at most one side may contain variables.
  friend MatExpr operator*(const MatExpr& a, const MatExpr& b);

  /// s * M for an affine scalar s and a constant matrix M.
  static MatExpr scalar_times(const LinExpr& s, const Matrix& m);

  /// Assemble from a grid of tiles; rows of the grid must agree in
  /// height, columns in width.
  static MatExpr blocks(const std::vector<std::vector<MatExpr>>& grid);

 private:
  int rows_, cols_;
  std::vector<LinExpr> e_;
};

/// trace(E) as an affine scalar.
LinExpr trace(const MatExpr& e);

/// trace(W * E) for a constant weight W.
LinExpr weighted_trace(const Matrix& w, const MatExpr& e);

}  // namespace lqsyn::sdp

#endif
