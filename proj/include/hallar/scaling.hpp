#pragma once

#include "hallar/types.hpp"

namespace hallar::scaling {

// τ_a scales the constraint side, τ_c the cost side, τ is the original
// trace bound. The scaled problem always has trace bound 1.
struct ScaleParams {
  double tau_a = 1.0;
  double tau_c = 1.0;
  double tau = 1.0;

  ScaleParams() = default;
  ScaleParams(double a, double c, double t);  // validates positivity
};

// C̃ = τ_c C,  Ã_ℓ = τ_a A_ℓ,  b̃ = (τ_a/τ) b,  trace bound 1.
SdpInstance scale_instance(const SdpInstance& inst, const ScaleParams& sp);

// X = τ X̃ realized on factors as Y = √τ · Ỹ.
Matrix unscale_primal(const Matrix& Yt, const ScaleParams& sp);

// p = (τ_a/τ_c) p̃,  θ = θ̃ / τ_c.
DualPoint unscale_dual(const Vector& pt, double thetat, const ScaleParams& sp);

// v = (τ/τ_c) ṽ.
double unscale_value(double vt, const ScaleParams& sp);

// β̃ = (τ τ_c / τ_a²) β and its inverse.
double scale_beta(double beta, const ScaleParams& sp);
double unscale_beta(double beta_t, const ScaleParams& sp);

}  // namespace hallar::scaling
