#include "hallar/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hallar/rng.hpp"

namespace hallar::spectral {

SymOperator slack_operator(const SdpInstance& inst, const Vector& q) {
  if (q.size() != inst.m)
    throw std::invalid_argument("slack_operator: multiplier length mismatch");
  SymOperator op;
  op.dim = inst.n;
  op.apply = [&inst, q](const Vector& v, Vector& out) {
    out.setZero();
    inst.cost().matvec_add(v, out);
    for (Index l = 0; l < inst.m; ++l)
      if (q[l] != 0.0) inst.constraint(l).matvec_add(v, out, q[l]);
  };
  return op;
}

EigResult min_eigpair(const SymOperator& op, double tol, int max_matvecs, std::uint64_t seed,
                      const Vector* start) {
  const Index n = op.dim;
  if (n < 1) throw std::invalid_argument("min_eigpair: operator dimension must be ≥ 1");
  if (!(tol > 0.0)) throw std::invalid_argument("min_eigpair: tolerance must be positive");

  EigResult best;
  best.lambda = std::numeric_limits<double>::infinity();

  Vector v0;
  if (start && start->size() == n && start->norm() > 0.0)
    v0 = *start / start->norm();
  else
    v0 = seeded_unit_vector(n, seed);

  const Index kdim = std::min<Index>(n, 25);
  Vector w(n);
  std::uint64_t restart_seed = seed;

  while (best.matvecs < max_matvecs) {
    Matrix Q(n, kdim);
    Vector alpha(kdim), beta(kdim);
    Q.col(0) = v0;
    Index k = 0;
    bool breakdown = false;
    for (; k < kdim && best.matvecs < max_matvecs; ++k) {
      op.apply(Q.col(k), w);
      ++best.matvecs;
      alpha[k] = Q.col(k).dot(w);
      // full reorthogonalization, applied twice
      auto basis = Q.leftCols(k + 1);
      w.noalias() -= basis * (basis.transpose() * w);
      w.noalias() -= basis * (basis.transpose() * w);
      const double nw = w.norm();
      beta[k] = nw;
      if (k + 1 == kdim) { ++k; break; }
      if (nw < 1e-13 * std::max(1.0, std::abs(alpha[k]))) {
        ++k;
        breakdown = true;
        break;
      }
      Q.col(k + 1) = w / nw;
    }
    if (k == 0) break;

    Matrix T = Matrix::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(T);
    const double ritz = es.eigenvalues()[0];
    Vector ritz_vec = Q.leftCols(k) * es.eigenvectors().col(0);
    ritz_vec /= ritz_vec.norm();

    op.apply(ritz_vec, w);
    ++best.matvecs;
    const double res = (w - ritz * ritz_vec).norm();
    const double lam_slack = 1e-12 * std::max(1.0, std::abs(ritz));
    if (ritz < best.lambda || (ritz <= best.lambda + lam_slack && res < best.residual)) {
      best.lambda = ritz;
      best.v = ritz_vec;
      best.residual = res;
    }
    if (res <= tol * std::max(1.0, std::abs(ritz))) {
      best.lambda = ritz;
      best.v = std::move(ritz_vec);
      best.residual = res;
      best.converged = true;
      break;
    }
    // restart from the newest Ritz vector; after an invariant-subspace
    // breakdown that missed the target, inject a fresh random direction
    if (breakdown) {
      v0 = seeded_unit_vector(n, ++restart_seed);
      v0 -= ritz_vec * ritz_vec.dot(v0);
      const double nrm = v0.norm();
      v0 = nrm > 1e-12 ? Vector(v0 / nrm) : seeded_unit_vector(n, ++restart_seed);
    } else {
      v0 = std::move(ritz_vec);
    }
  }
  return best;
}

}  // namespace hallar::spectral
