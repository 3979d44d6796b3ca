#pragma once

#include "hallar/types.hpp"

namespace hallar {

// A • (Y Yᵀ) without forming Y Yᵀ.
double quadform(const HybridMatrix& A, const Matrix& Y);

// [A_1 • X, …, A_m • X] at X = Y Yᵀ.
Vector apply_A(const SdpInstance& inst, const Matrix& Y);

// (Σ_ℓ p_ℓ A_ℓ) v via symmetric sparse matvecs and P(D(Pᵀv)).
Vector apply_Astar_vec(const SdpInstance& inst, const Vector& p, const Vector& v);

// (Σ_ℓ p_ℓ A_ℓ) Y, column-block version of the above.
Matrix apply_Astar_mat(const SdpInstance& inst, const Vector& p, const Matrix& Y);

// Augmented Lagrangian  C•X + ⟨p, A(X) − b⟩ + (β/2)‖A(X) − b‖²  at X = Y Yᵀ.
double al_objective(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta);

// Gradient in the factor: 2 (C + A*(q)) Y with q = p + β (A(Y Yᵀ) − b).
Matrix al_gradient(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta);

double primal_value(const SdpInstance& inst, const Matrix& Y);

// −bᵀp − τθ.
double dual_value(const SdpInstance& inst, const Vector& p, double theta);

// Dense n×n symmetrization, test-oracle only. Guarded against large n.
Matrix dense(const HybridMatrix& A);

// Shared evaluation state for the inner loop: one pass computes the
// constraint residual and the objective, the gradient reuses the residual.
struct AlEval {
  double value = 0.0;
  double cval = 0.0;  // C • (Y Yᵀ)
  Vector resid;       // A(Y Yᵀ) − b
};

AlEval al_eval(const SdpInstance& inst, const Matrix& Y, const Vector& p, double beta);
Matrix al_gradient_from_resid(const SdpInstance& inst, const Matrix& Y, const Vector& p,
                              double beta, const Vector& resid);

}  // namespace hallar
