#include "lqsyn/sdp/expr.hpp"

#include <cmath>

namespace lqsyn::sdp {

LinExpr LinExpr::term(int var, double coeff) {
  LinExpr e;
  if (coeff != 0.0) e.terms_.emplace_back(var, coeff);
  return e;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  c0_ += o.c0_;
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<int, double>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      const double c = terms_[i].second + o.terms_[j].second;
      if (c != 0.0) merged.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) { return *this += -o; }

LinExpr& LinExpr::operator*=(double s) {
  if (s == 0.0) {
    c0_ = 0.0;
    terms_.clear();
    return *this;
  }
  c0_ *= s;
  for (auto& t : terms_) t.second *= s;
  return *this;
}

LinExpr LinExpr::operator-() const {
  LinExpr e = *this;
  e *= -1.0;
  return e;
}

MatExpr::MatExpr(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {
  if (rows < 1 || cols < 1) throw DimensionMismatch("MatExpr: empty shape");
}

MatExpr MatExpr::constant(const Matrix& m) {
  MatExpr e(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int r = 0; r < e.rows_; ++r)
    for (int c = 0; c < e.cols_; ++c) e.at(r, c) = LinExpr(m(r, c));
  return e;
}

bool MatExpr::is_constant() const {
  for (const auto& x : e_)
    if (!x.is_constant()) return false;
  return true;
}

Matrix MatExpr::constant_value() const {
  if (!is_constant()) throw NonAffine("MatExpr: expression is not constant");
  Matrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = at(r, c).constant();
  return m;
}

MatExpr MatExpr::transpose() const {
  MatExpr t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatExpr& MatExpr::operator+=(const MatExpr& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("MatExpr: shape mismatch in addition");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatExpr& MatExpr::operator-=(const MatExpr& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("MatExpr: shape mismatch in subtraction");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatExpr operator*(double s, MatExpr a) {
  for (auto& x : a.e_) x *= s;
  return a;
}

MatExpr operator*(const Matrix& m, const MatExpr& e) {
  if (m.cols() != e.rows()) throw DimensionMismatch("MatExpr: shape mismatch in product");
  MatExpr out(static_cast<int>(m.rows()), e.cols());
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      LinExpr acc;
      for (int k = 0; k < e.rows(); ++k) {
        if (m(r, k) != 0.0) acc += m(r, k) * e.at(k, c);
      }
      out.at(r, c) = std::move(acc);
    }
  }
  return out;
}

MatExpr operator*(const MatExpr& e, const Matrix& m) {
  if (e.cols() != m.rows()) throw DimensionMismatch("MatExpr: shape mismatch in product");
  MatExpr out(e.rows(), static_cast<int>(m.cols()));
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      LinExpr acc;
      for (int k = 0; k < e.cols(); ++k) {
        if (m(k, c) != 0.0) acc += e.at(r, k) * m(k, c);
      }
      out.at(r, c) = std::move(acc);
    }
  }
  return out;
}

MatExpr operator*(const MatExpr& a, const MatExpr& b) {
  if (a.is_constant()) return a.constant_value() * b;
  if (b.is_constant()) return a * b.constant_value();
  throw NonAffine("MatExpr: product of two variable-bearing expressions");
}

MatExpr MatExpr::scalar_times(const LinExpr& s, const Matrix& m) {
  MatExpr out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int r = 0; r < out.rows_; ++r)
    for (int c = 0; c < out.cols_; ++c) out.at(r, c) = s * m(r, c);
  return out;
}

MatExpr MatExpr::blocks(const std::vector<std::vector<MatExpr>>& grid) {
  if (grid.empty() || grid[0].empty()) throw DimensionMismatch("MatExpr::blocks: empty grid");
  int total_rows = 0, total_cols = 0;
  for (const auto& row : grid) total_rows += row[0].rows();
  for (const auto& tile : grid[0]) total_cols += tile.cols();

  MatExpr out(total_rows, total_cols);
  int r0 = 0;
  for (const auto& row : grid) {
    const int h = row[0].rows();
    int c0 = 0;
    for (const auto& tile : row) {
      if (tile.rows() != h) throw DimensionMismatch("MatExpr::blocks: ragged row heights");
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < tile.cols(); ++c) out.at(r0 + r, c0 + c) = tile.at(r, c);
      c0 += tile.cols();
    }
    if (c0 != total_cols) throw DimensionMismatch("MatExpr::blocks: ragged column widths");
    r0 += h;
  }
  return out;
}

LinExpr trace(const MatExpr& e) {
  if (e.rows() != e.cols()) throw DimensionMismatch("trace: expression not square");
  LinExpr acc;
  for (int i = 0; i < e.rows(); ++i) acc += e.at(i, i);
  return acc;
}

LinExpr weighted_trace(const Matrix& w, const MatExpr& e) {
  if (w.cols() != e.rows() || w.rows() != e.cols()) {
    throw DimensionMismatch("weighted_trace: shape mismatch");
  }
  LinExpr acc;
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) {
      if (w(j, i) != 0.0) acc += w(j, i) * e.at(i, j);
    }
  return acc;
}

}  // namespace lqsyn::sdp
