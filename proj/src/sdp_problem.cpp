#include "lqsyn/sdp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace lqsyn::sdp {

int VarHandle::scalar_index(int r, int c) const {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw DimensionMismatch("VarHandle: entry out of range");
  }
  if (!symmetric) return offset + r * cols + c;
  const int i = std::min(r, c);
  const int j = std::max(r, c);
  return offset + i * rows - i * (i - 1) / 2 + (j - i);
}

VarHandle Problem::add_matrix_var(int rows, int cols, bool symmetric) {
  if (rows < 1 || cols < 1 || (symmetric && rows != cols)) {
    throw DimensionMismatch("add_matrix_var: invalid shape");
  }
  VarHandle h{n_vars_, rows, cols, symmetric};
  n_vars_ += h.count();
  return h;
}

VarHandle Problem::add_scalar_var() { return add_matrix_var(1, 1, false); }

MatExpr Problem::var(const VarHandle& h) const {
  MatExpr e(h.rows, h.cols);
  for (int r = 0; r < h.rows; ++r)
    for (int c = 0; c < h.cols; ++c) e.at(r, c) = LinExpr::term(h.scalar_index(r, c), 1.0);
  return e;
}

LinExpr Problem::scalar(const VarHandle& h) const {
  if (h.rows != 1 || h.cols != 1) {
    throw DimensionMismatch("Problem::scalar: handle is not a scalar variable");
  }
  return LinExpr::term(h.offset, 1.0);
}

int Problem::add_lmi_block(const MatExpr& expr, std::string label) {
  const int k = expr.rows();
  if (expr.cols() != k) throw DimensionMismatch("add_lmi_block: expression not square");

  CompiledBlock blk;
  blk.dim = k;
  blk.F0 = Matrix::Zero(k, k);
  blk.label = std::move(label);

  std::map<int, std::vector<CompiledBlock::Triplet>> by_var;
  for (int r = 0; r < k; ++r) {
    for (int c = r; c < k; ++c) {
      // fold the two mirrored entries together; they must agree
      LinExpr sym = 0.5 * (expr.at(r, c) + expr.at(c, r));
      LinExpr diff = expr.at(r, c) - expr.at(c, r);
      double mag = std::fabs(diff.constant());
      for (const auto& t : diff.terms()) mag = std::max(mag, std::fabs(t.second));
      if (mag > 1e-9) {
        throw DimensionMismatch("add_lmi_block: expression asymmetric at (" +
                                std::to_string(r) + "," + std::to_string(c) + ")");
      }
      blk.F0(r, c) = blk.F0(c, r) = sym.constant();
      for (const auto& [var, coeff] : sym.terms()) {
        by_var[var].push_back({r, c, coeff});
      }
    }
  }
  for (auto& [var, trips] : by_var) {
    blk.vars.push_back(var);
    blk.coeffs.push_back(std::move(trips));
  }
  blocks_.push_back(std::move(blk));
  return n_blocks() - 1;
}

void Problem::add_lower_bound(const VarHandle& scalar_var, double lb) {
  MatExpr e(1, 1);
  e.at(0, 0) = scalar(scalar_var) + LinExpr(-lb);
  add_lmi_block(e, "bound");
}

void Problem::set_objective(const LinExpr& obj) { objective_ = obj; }

Vector Problem::objective_vector() const {
  Vector c = Vector::Zero(n_vars_);
  for (const auto& [var, coeff] : objective_.terms()) c(var) += coeff;
  return c;
}

Matrix Problem::value(const VarHandle& h, const Vector& x) const {
  Matrix m(h.rows, h.cols);
  for (int r = 0; r < h.rows; ++r)
    for (int c = 0; c < h.cols; ++c) m(r, c) = x(h.scalar_index(r, c));
  return m;
}

void Problem::dump(std::ostream& os) const {
  os << "lqsyn-sdp 1\n";
  os << "nvars " << n_vars_ << "\n";
  os << "objective " << objective_.terms().size() << " " << objective_.constant() << "\n";
  for (const auto& [var, coeff] : objective_.terms()) os << var << " " << coeff << "\n";
  os << "blocks " << blocks_.size() << "\n";
  for (const auto& b : blocks_) {
    int f0_nnz = 0;
    for (int r = 0; r < b.dim; ++r)
      for (int c = r; c < b.dim; ++c)
        if (b.F0(r, c) != 0.0) ++f0_nnz;
    os << "block " << b.dim << " " << f0_nnz << " " << b.vars.size() << " " << b.label
       << "\n";
    for (int r = 0; r < b.dim; ++r)
      for (int c = r; c < b.dim; ++c)
        if (b.F0(r, c) != 0.0) os << r << " " << c << " " << b.F0(r, c) << "\n";
    for (std::size_t i = 0; i < b.vars.size(); ++i) {
      os << "var " << b.vars[i] << " " << b.coeffs[i].size() << "\n";
      for (const auto& t : b.coeffs[i]) os << t.r << " " << t.c << " " << t.v << "\n";
    }
  }
}

}  // namespace lqsyn::sdp
