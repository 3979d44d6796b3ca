#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hallar/options.hpp"
#include "hallar/types.hpp"

namespace hallar::solver {

using io::SolverOptions;

enum class SolveStatus { Optimal, IterationLimit, TimeLimit };

// One row of the iteration table. Values refer to the internally scaled
// problem (the one with trace bound 1); dval/gap are absent when the
// dual eigensolve did not converge.
struct IterRecord {
  long long iter = 0;
  Index rank = 0;
  std::optional<double> gap;
  double feas = 0.0;
  double pval = 0.0;
  std::optional<double> dval;
  double pnlty = 0.0;
  std::string steps;  // 'A' per descent call, 'F' per Frank–Wolfe step
};

struct SolveCounters {
  long long fista_calls = 0;
  long long acg_iterations = 0;
  long long fw_calls = 0;
  long long eig_skips = 0;
};

struct SolveResult {
  // Solution in the original (unscaled) variables.
  FactoredPrimal Y;
  Vector p;
  double theta = 0.0;

  SolveStatus status = SolveStatus::IterationLimit;
  SolveCounters counters;
  std::vector<IterRecord> records;
  double wall_seconds = 0.0;

  // Final metrics on the scaled problem, as logged.
  double pval = 0.0;
  double feas = 0.0;
  std::optional<double> dval;
  std::optional<double> gap;

  double value = 0.0;       // unscaled primal objective C • X
  double beta_final = 0.0;  // scaled penalty at exit
};

struct SolveCallbacks {
  std::function<void(const IterRecord&)> on_iteration;
  // level 2: per-inner-call summaries, level 3: eigensolver/backtracking traces
  std::function<void(int level, const std::string&)> log;
};

// Mutable state threaded through inner calls: backtracking memory for the
// adaptive Lipschitz estimate and the warm-start vector for eigensolves.
struct AdaptiveState {
  double last_L = 0.0;
  Vector eig_warm;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Outer augmented-Lagrangian loop. Scales the problem to trace bound 1
// internally, runs on factored iterates, and unscales the returned solution.
SolveResult solve(const SdpInstance& inst, const SolverOptions& opts,
                  const FactoredPrimal* warm = nullptr, const SolveCallbacks& cb = {});

struct DescentResult {
  FactoredPrimal Y;
  long long iters = 0;
  double grad_map_norm = 0.0;  // at the returned point
  enum class Exit { Stationary, IterCap, RestartCap, Deadline } exit = Exit::Stationary;
};

// Accelerated projected gradient on the AL objective over {‖Y‖_F² ≤ τ} with
// backtracked step sizes; one call per 'A' tag.
DescentResult adap_descent(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p,
                           double beta, const SolverOptions& opts, AdaptiveState* state = nullptr,
                           Deadline deadline = {}, const SolveCallbacks* cb = nullptr);

struct FwResult {
  FactoredPrimal Y;
  bool took = false;
  double fw_gap = 0.0;
  bool eig_ok = true;
  double alpha = 0.0;
};

// One Frank–Wolfe check/step: minimum eigenpair of S = C + A*(q), vertex
// τ·vvᵀ (or 0 when λ ≥ 0), exact line search, column append.
FwResult fw_step(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p, double beta,
                 const SolverOptions& opts, AdaptiveState* state = nullptr);

struct HlrResult {
  FactoredPrimal Y;
  std::string steps;
  SolveCounters counters;
};

// Inner loop of one outer iteration: descent call plus Frank–Wolfe
// rank-augmentation rounds, up to maxiter_hlr.
HlrResult hlr_subproblem(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p,
                         double beta, const SolverOptions& opts, AdaptiveState* state = nullptr,
                         Deadline deadline = {}, const SolveCallbacks* cb = nullptr);

struct ThetaResult {
  double theta = 0.0;
  bool ok = false;
};

// θ = max{0, −λ_min(C + A*(p))}; ok=false when the eigensolve missed the
// err_tol_eig acceptance threshold (dval is then reported as undefined).
ThetaResult compute_theta(const SdpInstance& inst, const Vector& p, const SolverOptions& opts,
                          AdaptiveState* state = nullptr);

struct TermInfo {
  double feas = 0.0;
  double gap = 0.0;
  bool done = false;
};

// feas = ‖A(X)−b‖₂ / (1+‖b‖₁), gap = |pval−dval| / (1+|pval|+|dval|).
TermInfo check_termination(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p,
                           double theta, const SolverOptions& opts);

// Insufficient feasibility progress raises β, fast progress lowers it,
// both clamped to [beta_min, beta_max]. Non-finite feas_prev leaves β as is.
double update_beta(double beta, double feas_prev, double feas, const SolverOptions& opts);

// Thin QR + SVD rank truncation: drops directions with σ ≤ tol·σ_max while
// preserving X = Y Yᵀ up to the dropped energy.
FactoredPrimal truncate_rank(const FactoredPrimal& Y, double tol);

// Seeded n×1 start factor with ‖Y₀‖_F² = τ/4.
FactoredPrimal default_initial(const SdpInstance& inst, std::uint64_t seed);

const char* status_name(SolveStatus s);

}  // namespace hallar::solver
