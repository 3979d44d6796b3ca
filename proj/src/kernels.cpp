#include "hallar/kernels.hpp"

#include <stdexcept>
#include <string>

namespace hallar {

namespace {

void check_dim(Index a, Index b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

double quadform(const HybridMatrix& A, const Matrix& Y) {
  check_dim(A.dim(), Y.rows(), "quadform");
  return A.quadform(Y);
}

Vector apply_A(const SdpInstance& inst, const Matrix& Y) {
  check_dim(inst.n, Y.rows(), "apply_A");
  Vector out(inst.m);
  for (Index l = 0; l < inst.m; ++l) out[l] = inst.constraint(l).quadform(Y);
  return out;
}

Vector apply_Astar_vec(const SdpInstance& inst, const Vector& p, const Vector& v) {
  check_dim(inst.m, p.size(), "apply_Astar_vec");
  check_dim(inst.n, v.size(), "apply_Astar_vec");
  Vector out = Vector::Zero(inst.n);
  for (Index l = 0; l < inst.m; ++l)
    if (p[l] != 0.0) inst.constraint(l).matvec_add(v, out, p[l]);
  return out;
}

Matrix apply_Astar_mat(const SdpInstance& inst, const Vector& p, const Matrix& Y) {
  check_dim(inst.m, p.size(), "apply_Astar_mat");
  check_dim(inst.n, Y.rows(), "apply_Astar_mat");
  Matrix out = Matrix::Zero(Y.rows(), Y.cols());
  for (Index l = 0; l < inst.m; ++l)
    if (p[l] != 0.0) inst.constraint(l).apply_add(Y, out, p[l]);
  return out;
}

AlEval al_eval(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta) {
  AlEval ev;
  ev.resid = apply_A(inst, Y) - inst.b;
  ev.cval = inst.cost().quadform(Y);
  ev.value = ev.cval + p.dot(ev.resid) + 0.5 * beta * ev.resid.squaredNorm();
  return ev;
}

Matrix al_gradient_from_resid(const SdpInstance& inst, const Matrix& Y, const Vector& p,
                              double beta, const Vector& resid) {
  const Vector q = p + beta * resid;
  Matrix g = Matrix::Zero(Y.rows(), Y.cols());
  inst.cost().apply_add(Y, g);
  for (Index l = 0; l < inst.m; ++l)
    if (q[l] != 0.0) inst.constraint(l).apply_add(Y, g, q[l]);
  return 2.0 * g;
}

double al_objective(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("al_objective: beta must be positive");
  return al_eval(inst, Y, p, beta).value;
}

Matrix al_gradient(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("al_gradient: beta must be positive");
  const AlEval ev = al_eval(inst, Y, p, beta);
  return al_gradient_from_resid(inst, Y, p, beta, ev.resid);
}

double primal_value(const SdpInstance& inst, const Matrix& Y) {
  return quadform(inst.cost(), Y);
}

double dual_value(const SdpInstance& inst, const Vector& p, double theta) {
  check_dim(inst.m, p.size(), "dual_value");
  return -inst.b.dot(p) - inst.tau * theta;
}

Matrix dense(const HybridMatrix& A) {
  constexpr Index kDenseGuard = 2048;
  if (A.dim() > kDenseGuard)
    throw std::invalid_argument("dense: refusing to materialize a matrix of dimension " +
                                std::to_string(A.dim()));
  Matrix M = Matrix::Zero(A.dim(), A.dim());
  if (A.sparse())
    A.sparse()->for_each([&](Index i, Index j, double v) {
      M(i, j) += v;
      if (i != j) M(j, i) += v;
    });
  if (A.lowrank()) {
    const LowRankFactor& lr = *A.lowrank();
    M.noalias() += lr.P() * lr.D() * lr.P().transpose();
  }
  return M;
}

}  // namespace hallar
