#include "lqsyn/sdp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lqsyn::sdp {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::MaxIter: return "MaxIter";
  }
  return "?";
}

namespace {

using Trip = CompiledBlock::Triplet;

// U += s * F where F is given as upper triplets of a symmetric matrix.
void scatter_add(Matrix& U, const std::vector<Trip>& trips, double s) {
  for (const Trip& t : trips) {
    U(t.r, t.c) += s * t.v;
    if (t.r != t.c) U(t.c, t.r) += s * t.v;
  }
}

// trace(F * G) for symmetric triplet F and a general square G.
double dot_sym(const std::vector<Trip>& trips, const Matrix& G) {
  double acc = 0.0;
  for (const Trip& t : trips) {
    acc += t.r == t.c ? t.v * G(t.r, t.r) : t.v * (G(t.r, t.c) + G(t.c, t.r));
  }
  return acc;
}

// W = F * Z for symmetric triplet F.
void sparse_times_dense(const std::vector<Trip>& trips, const Matrix& Z, Matrix& W) {
  W.setZero();
  for (const Trip& t : trips) {
    W.row(t.r) += t.v * Z.row(t.c);
    if (t.r != t.c) W.row(t.c) += t.v * Z.row(t.r);
  }
}

}  // namespace

namespace detail {

void assemble_schur(const std::vector<CompiledBlock>& blocks,
                    const std::vector<Matrix>& Sinv, const std::vector<Matrix>& Z,
                    Matrix& M, bool parallel) {
  M.setZero();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const CompiledBlock& blk = blocks[b];
    const int m = static_cast<int>(blk.vars.size());
    const int k = blk.dim;
    if (m == 0) continue;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel && m > 32)
#endif
    for (int a = 0; a < m; ++a) {
      Matrix W(k, k), G(k, k);
      sparse_times_dense(blk.coeffs[a], Z[b], W);
      G.noalias() = Sinv[b] * W;  // Sinv F_a Z
      const int ga = blk.vars[a];
      double* row = M.data() + ga;  // column-major: M(ga, gj) = row[gj * n]
      const long n = M.rows();
      for (int j = 0; j <= a; ++j) {
        row[blk.vars[j] * n] += dot_sym(blk.coeffs[j], G);
      }
    }
  }
  (void)parallel;
}

void assemble_schur_reference(const std::vector<CompiledBlock>& blocks,
                              const std::vector<Matrix>& Sinv,
                              const std::vector<Matrix>& Z, Matrix& M) {
  M.setZero();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const CompiledBlock& blk = blocks[b];
    const int k = blk.dim;
    for (std::size_t a = 0; a < blk.vars.size(); ++a) {
      Matrix Fa = Matrix::Zero(k, k);
      scatter_add(Fa, blk.coeffs[a], 1.0);
      const Matrix Ga = Sinv[b] * Fa * Z[b];
      for (std::size_t j = 0; j <= a; ++j) {
        Matrix Fj = Matrix::Zero(k, k);
        scatter_add(Fj, blk.coeffs[j], 1.0);
        M(blk.vars[a], blk.vars[j]) += (Fj.transpose().cwiseProduct(Ga)).sum();
      }
    }
  }
}

}  // namespace detail

namespace {

struct Workspace {
  const std::vector<CompiledBlock>* blocks;
  int n = 0;
  int nu = 0;  // total cone dimension
  Vector c;
  double obj_const = 0.0;
  std::vector<bool> used;

  Vector x;
  std::vector<Matrix> S, Z, Sinv, Rp;
  std::vector<Eigen::LLT<Matrix>> S_llt;

  double scale_coeff = 1.0;  // max ||F_bi||_F
  double scale_f0 = 1.0;     // max ||F_b0||_F
};

double fro(const Matrix& m) { return m.norm(); }

// F_b(x) for one block.
Matrix eval_block(const CompiledBlock& blk, const Vector& x) {
  Matrix F = blk.F0;
  for (std::size_t a = 0; a < blk.vars.size(); ++a) {
    scatter_add(F, blk.coeffs[a], x(blk.vars[a]));
  }
  return F;
}

// A(U)_i = sum_b <F_bi, U_b>, accumulated into y.
void apply_adjoint(const Workspace& w, const std::vector<Matrix>& U, Vector& y) {
  y.setZero();
  const auto& blocks = *w.blocks;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t a = 0; a < blocks[b].vars.size(); ++a) {
      y(blocks[b].vars[a]) += dot_sym(blocks[b].coeffs[a], U[b]);
    }
  }
}

//

double min_eig_dense(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Largest step alpha with P + alpha*dP staying PSD, through the Cholesky
// factor of P.
double step_to_boundary(const Eigen::LLT<Matrix>& llt, const Matrix& dP) {
  const Matrix& L = llt.matrixLLT();
  const Matrix Y = L.triangularView<Eigen::Lower>().solve(dP);
  const Matrix W = L.triangularView<Eigen::Lower>().solve(Y.transpose());
  const double lam = min_eig_dense(W);
  if (lam >= -1e-14) return std::numeric_limits<double>::infinity();
  return -1.0 / lam;
}

Solution finish(const Workspace& w, SolveStatus status, int iters, std::string msg) {
  Solution sol;
  sol.x = w.x;
  sol.status = status;
  sol.iterations = iters;
  sol.message = std::move(msg);
  sol.objective_value = w.c.dot(w.x) + w.obj_const;

  const auto& blocks = *w.blocks;
  double viol = 0.0;
  double gap = 0.0, pobj = sol.objective_value, dobj = w.obj_const;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Matrix F = eval_block(blocks[b], w.x);
    viol = std::max(viol, -min_eig_dense(F) / (1.0 + fro(blocks[b].F0)));
    gap += (w.S[b].cwiseProduct(w.Z[b])).sum();
    dobj -= (blocks[b].F0.cwiseProduct(w.Z[b])).sum();
  }
  sol.max_constraint_violation = std::max(0.0, viol);
  sol.duality_gap = std::max(0.0, gap) / (1.0 + std::fabs(pobj) + std::fabs(dobj));
  return sol;
}

}  // namespace

Solution solve(const Problem& p, const SolverOptions& opts) {
  const auto& blocks = p.blocks();
  if (blocks.empty()) throw Error("sdp::solve: problem has no blocks");

  Workspace w;
  w.blocks = &blocks;
  w.n = p.n_vars();
  w.c = p.objective_vector();
  w.obj_const = p.objective().constant();

  // no decision variables: plain feasibility check on the constants
  if (w.n == 0) {
    Solution sol;
    sol.x = Vector::Zero(0);
    sol.objective_value = w.obj_const;
    double viol = 0.0;
    for (const auto& b : blocks) {
      viol = std::max(viol, -min_eig_dense(b.F0) / (1.0 + fro(b.F0)));
    }
    sol.max_constraint_violation = std::max(0.0, viol);
    sol.status = viol <= opts.feas_tol ? SolveStatus::Optimal : SolveStatus::Infeasible;
    return sol;
  }

  w.used.assign(w.n, false);
  for (const auto& b : blocks) {
    w.nu += b.dim;
    w.scale_f0 = std::max(w.scale_f0, fro(b.F0));
    for (std::size_t a = 0; a < b.vars.size(); ++a) {
      w.used[b.vars[a]] = true;
      double s2 = 0.0;
      for (const Trip& t : b.coeffs[a]) s2 += (t.r == t.c ? 1.0 : 2.0) * t.v * t.v;
      w.scale_coeff = std::max(w.scale_coeff, std::sqrt(s2));
    }
  }
  for (int i = 0; i < w.n; ++i) {
    if (!w.used[i] && w.c(i) != 0.0) {
      Solution sol;
      sol.x = Vector::Zero(w.n);
      sol.status = SolveStatus::Unbounded;
      sol.objective_value = w.obj_const;
      sol.message = "variable " + std::to_string(i) +
                    " has nonzero cost but appears in no block";
      return sol;
    }
  }

  // starting point: x = 0, well-scaled multiples of the identity
  w.x = Vector::Zero(w.n);
  const std::size_t B = blocks.size();
  w.S.resize(B);
  w.Z.resize(B);
  w.Sinv.resize(B);
  w.Rp.resize(B);
  w.S_llt.resize(B);
  const double zeta = 10.0 + w.c.cwiseAbs().maxCoeff();
  double zn_init = 0.0;
  for (std::size_t b = 0; b < B; ++b) {
    const int k = blocks[b].dim;
    double coeff_norm = 1.0;
    for (const auto& trips : blocks[b].coeffs) {
      double s2 = 0.0;
      for (const Trip& t : trips) s2 += (t.r == t.c ? 1.0 : 2.0) * t.v * t.v;
      coeff_norm = std::max(coeff_norm, std::sqrt(s2));
    }
    const double eta = 10.0 + 2.0 * fro(blocks[b].F0) + coeff_norm;
    w.S[b] = eta * Matrix::Identity(k, k);
    w.Z[b] = zeta * Matrix::Identity(k, k);
    zn_init += zeta * zeta * k;
  }
  zn_init = std::sqrt(zn_init);

  Matrix M(w.n, w.n);
  Vector rd(w.n), rhs(w.n), dx(w.n), dx_aff(w.n);
  std::vector<Matrix> dS(B), dZ(B), dS_aff(B), dZ_aff(B), Rc(B), N(B);
  std::vector<Eigen::LLT<Matrix>> Z_llt(B);

  double tau = 0.9;
  double best_score = std::numeric_limits<double>::infinity();
  Vector best_x = w.x;
  int small_steps = 0;

  auto solve_direction = [&](const Eigen::LLT<Matrix>& Mf, double mu_target,
                             bool with_corrector, std::vector<Matrix>& dS_out,
                             std::vector<Matrix>& dZ_out, Vector& dx_out) {
    for (std::size_t b = 0; b < B; ++b) {
      const int k = blocks[b].dim;
      N[b].noalias() = -w.Sinv[b] * (w.Rp[b] * w.Z[b]);
      if (with_corrector) N[b].noalias() -= w.Sinv[b] * Rc[b];
      if (mu_target != 0.0) N[b] += mu_target * w.Sinv[b];
      (void)k;
    }
    apply_adjoint(w, N, rhs);
    rhs -= w.c;
    for (int i = 0; i < w.n; ++i) {
      if (!w.used[i]) rhs(i) = 0.0;
    }
    dx_out = Mf.solve(rhs);
    for (std::size_t b = 0; b < B; ++b) {
      dS_out[b] = w.Rp[b];
      for (std::size_t a = 0; a < blocks[b].vars.size(); ++a) {
        scatter_add(dS_out[b], blocks[b].coeffs[a], dx_out(blocks[b].vars[a]));
      }
      Matrix T = -w.Sinv[b] * (dS_out[b] * w.Z[b]);
      if (with_corrector) T -= w.Sinv[b] * Rc[b];
      if (mu_target != 0.0) T += mu_target * w.Sinv[b];
      T -= w.Z[b];
      dZ_out[b] = 0.5 * (T + T.transpose());
    }
  };

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    // residuals and merit quantities
    double gap = 0.0, dobj = w.obj_const, pinf = 0.0, zn = 0.0;
    for (std::size_t b = 0; b < B; ++b) {
      w.Rp[b] = eval_block(blocks[b], w.x) - w.S[b];
      pinf = std::max(pinf, fro(w.Rp[b]) / (1.0 + fro(blocks[b].F0)));
      gap += (w.S[b].cwiseProduct(w.Z[b])).sum();
      dobj -= (blocks[b].F0.cwiseProduct(w.Z[b])).sum();
      zn += w.Z[b].squaredNorm();
    }
    zn = std::sqrt(zn);
    apply_adjoint(w, w.Z, rd);
    rd = w.c - rd;
    for (int i = 0; i < w.n; ++i) {
      if (!w.used[i]) rd(i) = 0.0;
    }
    const double pobj = w.c.dot(w.x) + w.obj_const;
    const double dinf = rd.norm() / (1.0 + w.c.norm());
    const double relgap = gap / (1.0 + std::fabs(pobj) + std::fabs(dobj));
    const double mu = gap / w.nu;

    if (opts.verbose) {
      std::fprintf(stderr, "it %3d  pobj % .6e  dobj % .6e  gap %.2e  pinf %.2e  dinf %.2e\n",
                   iter, pobj, dobj, relgap, pinf, dinf);
    }

    const double score = std::max({pinf, dinf, relgap});
    if (score < best_score) {
      best_score = score;
      best_x = w.x;
    }

    if (pinf <= opts.feas_tol && dinf <= opts.feas_tol && relgap <= opts.gap_tol) {
      return finish(w, SolveStatus::Optimal, iter, "converged");
    }

    // dual ray => no feasible x: A(Z) ~ 0 with -<F0, Z> > 0
    if (zn > 1e2 * zn_init) {
      const double ray_viol = (w.c - rd).norm() / zn;
      const double ray_obj = (dobj - w.obj_const) / zn;
      if (ray_viol <= 1e-7 * (1.0 + w.scale_coeff) && ray_obj >= 1e-7) {
        return finish(w, SolveStatus::Infeasible, iter,
                      "dual improving ray certifies primal infeasibility");
      }
    }
    // primal ray => objective unbounded below: A'(d) >= 0 with c'd < 0
    const double xn = w.x.norm();
    if (pobj < -1e9 || xn > 1e9) {
      bool ray = w.c.dot(w.x) / xn <= -1e-9 * (1.0 + w.c.norm());
      for (std::size_t b = 0; b < B && ray; ++b) {
        Matrix U = Matrix::Zero(blocks[b].dim, blocks[b].dim);
        for (std::size_t a = 0; a < blocks[b].vars.size(); ++a) {
          scatter_add(U, blocks[b].coeffs[a], w.x(blocks[b].vars[a]) / xn);
        }
        if (min_eig_dense(U) < -1e-7 * (1.0 + w.scale_coeff)) ray = false;
      }
      if (ray) {
        return finish(w, SolveStatus::Unbounded, iter,
                      "primal improving ray certifies unboundedness");
      }
      if (xn > 1e12) {
        w.x = best_x;
        return finish(w, SolveStatus::MaxIter, iter, "iterates diverged");
      }
    }

    // factor the blocks
    for (std::size_t b = 0; b < B; ++b) {
      w.S_llt[b].compute(w.S[b]);
      if (w.S_llt[b].info() != Eigen::Success) {
        throw NumericalBreakdown("sdp::solve: slack block lost definiteness", iter);
      }
      const int k = blocks[b].dim;
      w.Sinv[b] = w.S_llt[b].solve(Matrix::Identity(k, k));
      Z_llt[b].compute(w.Z[b]);
      if (Z_llt[b].info() != Eigen::Success) {
        throw NumericalBreakdown("sdp::solve: dual block lost definiteness", iter);
      }
    }

    // Schur complement, shared by predictor and corrector
    detail::assemble_schur(blocks, w.Sinv, w.Z, M, opts.parallel);
    for (int i = 0; i < w.n; ++i) {
      if (!w.used[i]) M(i, i) = 1.0;
    }
    Eigen::LLT<Matrix> Mf;
    double ridge = 0.0;
    for (;;) {
      Mf.compute(M.selfadjointView<Eigen::Lower>());
      if (Mf.info() == Eigen::Success) break;
      ridge = ridge == 0.0 ? 1e-13 * (1.0 + M.diagonal().maxCoeff()) : ridge * 100.0;
      if (ridge > 1e-4 * (1.0 + M.diagonal().maxCoeff())) {
        throw NumericalBreakdown("sdp::solve: Schur system factorization failed", iter);
      }
      M.diagonal().array() += ridge;
    }

    // predictor (affine scaling)
    solve_direction(Mf, 0.0, false, dS_aff, dZ_aff, dx_aff);
    double ap = 1.0, ad = 1.0;
    for (std::size_t b = 0; b < B; ++b) {
      ap = std::min(ap, tau * step_to_boundary(w.S_llt[b], dS_aff[b]));
      ad = std::min(ad, tau * step_to_boundary(Z_llt[b], dZ_aff[b]));
    }
    double gap_aff = 0.0;
    for (std::size_t b = 0; b < B; ++b) {
      gap_aff += ((w.S[b] + ap * dS_aff[b]).cwiseProduct(w.Z[b] + ad * dZ_aff[b])).sum();
    }
    const double mu_aff = std::max(gap_aff, 0.0) / w.nu;
    double sigma = std::pow(std::min(mu_aff / mu, 1.0), 3);
    sigma = std::clamp(sigma, 1e-8, 1.0);

    // corrector
    for (std::size_t b = 0; b < B; ++b) Rc[b].noalias() = dS_aff[b] * dZ_aff[b];
    solve_direction(Mf, sigma * mu, true, dS, dZ, dx);
    ap = 1.0;
    ad = 1.0;
    for (std::size_t b = 0; b < B; ++b) {
      ap = std::min(ap, tau * step_to_boundary(w.S_llt[b], dS[b]));
      ad = std::min(ad, tau * step_to_boundary(Z_llt[b], dZ[b]));
    }

    w.x += ap * dx;
    for (std::size_t b = 0; b < B; ++b) {
      w.S[b] += ap * dS[b];
      w.S[b] = 0.5 * (w.S[b] + w.S[b].transpose()).eval();
      w.Z[b] += ad * dZ[b];
      w.Z[b] = 0.5 * (w.Z[b] + w.Z[b].transpose()).eval();
    }
    tau = 0.9 + 0.09 * std::min({ap, ad, 1.0});

    small_steps = std::min(ap, ad) < 1e-4 ? small_steps + 1 : 0;
    if (small_steps >= 5) {
      w.x = best_x;
      return finish(w, SolveStatus::MaxIter, iter,
                    "step sizes collapsed before reaching tolerances");
    }
  }

  w.x = best_x;
  return finish(w, SolveStatus::MaxIter, iter, "iteration limit reached");
}

}  // namespace lqsyn::sdp
