#pragma once

#include <cstdint>
#include <functional>

#include "hallar/types.hpp"

namespace hallar::spectral {

// Matrix-free symmetric operator v ↦ S v.
struct SymOperator {
  Index dim = 0;
  std::function<void(const Vector&, Vector&)> apply;
};

// S = C + Σ_ℓ q_ℓ A_ℓ for an instance's data matrices.
SymOperator slack_operator(const SdpInstance& inst, const Vector& q);

struct EigResult {
  double lambda = 0.0;
  Vector v;
  bool converged = false;
  double residual = 0.0;  // ‖S v − λ v‖₂
  int matvecs = 0;
};

// Smallest Ritz pair by restarted Lanczos with full reorthogonalization.
// Convergence: ‖S v − λ v‖ ≤ tol · max(1, |λ|) within max_matvecs matrix
// applications. A caller-supplied start vector warm-starts the first cycle;
// otherwise the start is a seeded pseudo-random unit vector.
EigResult min_eigpair(const SymOperator& op, double tol, int max_matvecs, std::uint64_t seed,
                      const Vector* start = nullptr);

}  // namespace hallar::spectral
