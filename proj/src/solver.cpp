#include "hallar/solver.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hallar/kernels.hpp"
#include "hallar/numfmt.hpp"
#include "hallar/rng.hpp"
#include "hallar/scaling.hpp"
#include "hallar/spectral.hpp"

namespace hallar::solver {

namespace {

constexpr double kRankTruncTol = 1e-10;

Matrix project_ball(Matrix Y, double tau) {
  const double sq = Y.squaredNorm();
  if (sq > tau) Y *= std::sqrt(tau / sq);
  return Y;
}

// Stationarity the inner loop must reach before the outer loop moves on.
double inner_target(const SolverOptions& o, double beta) {
  return std::max(o.err_tol_fista, 0.1 * beta * o.eps_pfeas);
}

int eig_budget(Index n) { return static_cast<int>(std::max<Index>(200, 20 * n)); }

double feas_of(double resid_norm, double b_l1) { return resid_norm / (1.0 + b_l1); }

double gap_of(double pval, double dval) {
  return std::abs(pval - dval) / (1.0 + std::abs(pval) + std::abs(dval));
}

bool past(const Deadline& d) {
  return d && std::chrono::steady_clock::now() >= *d;
}

}  // namespace

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::IterationLimit: return "IterationLimit";
    case SolveStatus::TimeLimit: return "TimeLimit";
  }
  return "?";
}

DescentResult adap_descent(const SdpInstance& inst, const FactoredPrimal& Y0, const Vector& p,
                           double beta, const SolverOptions& opts, AdaptiveState* state,
                           Deadline deadline, const SolveCallbacks* cb) {
  if (!(beta > 0.0)) throw std::invalid_argument("adap_descent: beta must be positive");
  const double tau = inst.tau;
  const double target = inner_target(opts, beta);
  const double stop_tol = std::max(opts.err_tol_fista, opts.sigma_fista * target);

  double L_accepted = opts.L0_fista;
  if (state && state->last_L > 0.0) L_accepted = std::max(L_accepted, state->last_L);

  Matrix Y = Y0;
  Matrix Yprev = Y0;
  AlEval ev = al_eval(inst, Y, p, beta);
  const double f0 = ev.value;
  double fY = f0;
  double t = 1.0, tprev = 1.0;
  long long restarts = 0;
  double L = L_accepted;

  DescentResult out;
  out.exit = DescentResult::Exit::IterCap;
  double gm = std::numeric_limits<double>::quiet_NaN();

  for (long long it = 1; it <= opts.maxiter_fista; ++it) {
    // each step restarts the backtracking at the larger of L0 and μ·L_last;
    // the first step length of a call is additionally capped by λ0
    L = std::max(opts.L0_fista, L_accepted * opts.mu_fista);
    if (it == 1) L = std::max(L, 1.0 / opts.lam0_aipp);

    const double mom = (tprev - 1.0) / t;
    Matrix W;
    AlEval evW;
    if (mom != 0.0) {
      W = Y + mom * (Y - Yprev);
      evW = al_eval(inst, W, p, beta);
    } else {
      W = Y;
      evW = ev;
    }
    Matrix g = al_gradient_from_resid(inst, W, p, beta, evW.resid);

    // ulp-level slack so the tail phase can keep moving toward stationarity
    const double fp_slack = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(fY);
    Matrix Yplus;
    AlEval evPlus;
    for (;;) {
      Yplus = project_ball(W - g / L, tau);
      evPlus = al_eval(inst, Yplus, p, beta);
      const Matrix diff = Yplus - W;
      const double rhs = evW.value + g.cwiseProduct(diff).sum() + 0.5 * L * diff.squaredNorm() +
                         opts.chi_fista * std::abs(evW.value);
      const bool model_ok = evPlus.value <= rhs;
      // a plain gradient step must also genuinely decrease; the chi slack in
      // the model test alone can admit small increases at too-small L
      const bool descent_ok = mom != 0.0 || evPlus.value < fY + fp_slack;
      if ((model_ok && descent_ok) || L > 1e30) break;
      L *= opts.L_inc_fista;
      if (cb && cb->log) cb->log(3, "      [acg] backtrack L -> " + numfmt::shortest(L));
    }
    ++out.iters;
    L_accepted = L;
    if (state) state->last_L = L;

    if (!(evPlus.value < fY + fp_slack)) {
      if (mom != 0.0) {
        // extrapolation overshoot: restart the momentum sequence; only
        // back-to-back restarts with no real progress count toward the cap
        ++restarts;
        t = tprev = 1.0;
        Yprev = Y;
        if (restarts >= opts.maxiter_aipp) {
          out.exit = DescentResult::Exit::RestartCap;
          break;
        }
        continue;
      }
      // a plain projected-gradient step no longer decreases: numerical floor
      break;
    }
    if (evPlus.value < fY) restarts = 0;

    Yprev = Y;
    Y = std::move(Yplus);
    ev = evPlus;
    fY = ev.value;
    tprev = t;
    t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));

    const Matrix g2 = al_gradient_from_resid(inst, Y, p, beta, ev.resid);
    gm = L * (Y - project_ball(Y - g2 / L, tau)).norm();
    if (gm <= stop_tol) {
      out.exit = DescentResult::Exit::Stationary;
      break;
    }
    if (past(deadline)) {
      out.exit = DescentResult::Exit::Deadline;
      break;
    }
  }

  if (fY > f0) {
    // slack-accepted tail steps may not beat the entry point; fall back
    Y = Y0;
    ev = al_eval(inst, Y0, p, beta);
    gm = std::numeric_limits<double>::quiet_NaN();
    if (out.exit == DescentResult::Exit::Stationary) out.exit = DescentResult::Exit::IterCap;
  }
  if (std::isnan(gm)) {
    const Matrix g2 = al_gradient_from_resid(inst, Y, p, beta, ev.resid);
    gm = L * (Y - project_ball(Y - g2 / L, tau)).norm();
  }
  out.Y = std::move(Y);
  out.grad_map_norm = gm;
  return out;
}

FwResult fw_step(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p, double beta,
                 const SolverOptions& opts, AdaptiveState* state) {
  const double tau = inst.tau;
  const AlEval ev = al_eval(inst, Y, p, beta);
  const Vector q = p + beta * ev.resid;
  const spectral::SymOperator op = spectral::slack_operator(inst, q);
  const Vector* warm = (state && state->eig_warm.size() == inst.n) ? &state->eig_warm : nullptr;
  const spectral::EigResult eig =
      spectral::min_eigpair(op, opts.eps_eig, eig_budget(inst.n), opts.seed, warm);

  FwResult out;
  out.Y = Y;
  if (eig.residual > opts.err_tol_eig * std::max(1.0, std::abs(eig.lambda))) {
    out.eig_ok = false;
    out.fw_gap = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (state) state->eig_warm = eig.v;

  // ⟨S, X⟩ with S = C + A*(q), minus the best vertex value min(0, τ λ_min)
  const double sx = ev.cval + q.dot(ev.resid + inst.b);
  const double sv = eig.lambda < 0.0 ? tau * eig.lambda : 0.0;
  out.fw_gap = sx - sv;

  const double trigger = 10.0 * opts.err_tol_fista;
  if (out.fw_gap <= trigger) return out;

  // exact line search: the AL objective along X(α) = (1−α)X + αV is a
  // 1-D quadratic with slope −fw_gap and curvature β‖A(V−X)‖²
  Vector av = Vector::Zero(inst.m);
  if (eig.lambda < 0.0) {
    const Matrix vm = eig.v;
    av = tau * apply_A(inst, vm);
  }
  const Vector d = av - (ev.resid + inst.b);
  const double curv = beta * d.squaredNorm();
  const double alpha = curv > 0.0 ? std::min(1.0, out.fw_gap / curv) : 1.0;
  const double shrink = std::sqrt(std::max(0.0, 1.0 - alpha));

  if (eig.lambda < 0.0) {
    const double grow = std::sqrt(alpha * tau);
    if (alpha >= 1.0) {
      out.Y = grow * eig.v;
    } else {
      Matrix Ynew(inst.n, Y.cols() + 1);
      Ynew.leftCols(Y.cols()) = shrink * Y;
      Ynew.col(Y.cols()) = grow * eig.v;
      out.Y = std::move(Ynew);
    }
  } else {
    out.Y = shrink * Y;
  }
  out.took = true;
  out.alpha = alpha;
  return out;
}

HlrResult hlr_subproblem(const SdpInstance& inst, const FactoredPrimal& Y0, const Vector& p,
                         double beta, const SolverOptions& opts, AdaptiveState* state,
                         Deadline deadline, const SolveCallbacks* cb) {
  HlrResult out;
  out.Y = Y0;
  const double target = inner_target(opts, beta);
  for (long long round = 0; round < opts.maxiter_hlr; ++round) {
    DescentResult desc = adap_descent(inst, out.Y, p, beta, opts, state, deadline, cb);
    out.Y = std::move(desc.Y);
    out.steps += 'A';
    ++out.counters.fista_calls;
    out.counters.acg_iterations += desc.iters;

    FwResult fw = fw_step(inst, out.Y, p, beta, opts, state);
    if (cb && cb->log)
      cb->log(2, "    [hlr] A iters=" + std::to_string(desc.iters) +
                     " gmap=" + numfmt::sci1(desc.grad_map_norm) +
                     (fw.eig_ok ? " fw_gap=" + numfmt::sci1(fw.fw_gap) : " fw_gap=n/a") +
                     (fw.took ? " F alpha=" + numfmt::sci1(fw.alpha) : ""));
    if (!fw.eig_ok) {
      ++out.counters.eig_skips;
      break;
    }
    if (fw.took) {
      out.Y = std::move(fw.Y);
      out.steps += 'F';
      ++out.counters.fw_calls;
    }
    if (fw.fw_gap <= target || !fw.took) break;
    if (past(deadline)) break;
  }
  return out;
}

ThetaResult compute_theta(const SdpInstance& inst, const Vector& p, const SolverOptions& opts,
                          AdaptiveState* state) {
  const spectral::SymOperator op = spectral::slack_operator(inst, p);
  const Vector* warm = (state && state->eig_warm.size() == inst.n) ? &state->eig_warm : nullptr;
  const spectral::EigResult eig =
      spectral::min_eigpair(op, opts.eps_eig, eig_budget(inst.n), opts.seed, warm);
  ThetaResult out;
  out.ok = eig.residual <= opts.err_tol_eig * std::max(1.0, std::abs(eig.lambda));
  out.theta = std::max(0.0, -eig.lambda);
  if (state && out.ok) state->eig_warm = eig.v;
  return out;
}

TermInfo check_termination(const SdpInstance& inst, const FactoredPrimal& Y, const Vector& p,
                           double theta, const SolverOptions& opts) {
  if (!(theta >= 0.0)) throw std::invalid_argument("check_termination: theta must be ≥ 0");
  const Vector resid = apply_A(inst, Y) - inst.b;
  TermInfo out;
  out.feas = feas_of(resid.norm(), inst.b.lpNorm<1>());
  out.gap = gap_of(primal_value(inst, Y), dual_value(inst, p, theta));
  out.done = out.feas <= opts.eps_pfeas && out.gap <= opts.eps_gap;
  return out;
}

double update_beta(double beta, double feas_prev, double feas, const SolverOptions& opts) {
  if (!std::isfinite(feas_prev)) return beta;
  if (feas > 0.5 * feas_prev) return std::min(beta * opts.beta_inc, opts.beta_max);
  if (feas < 0.05 * feas_prev && beta > opts.beta_min)
    return std::max(beta / opts.beta_inc, opts.beta_min);
  return beta;
}

FactoredPrimal truncate_rank(const FactoredPrimal& Y, double tol) {
  const Index n = Y.rows();
  if (Y.cols() == 0) return Matrix::Zero(n, 1);
  const Index rr = std::min(n, Y.cols());
  Eigen::HouseholderQR<Matrix> qr(Y);
  const Matrix R = Matrix(qr.matrixQR().triangularView<Eigen::Upper>()).topRows(rr);
  Eigen::JacobiSVD<Matrix> svd(R, Eigen::ComputeThinU);
  const Vector& sig = svd.singularValues();
  const double smax = sig.size() ? sig[0] : 0.0;
  Index keep = 0;
  for (Index k = 0; k < sig.size(); ++k)
    if (sig[k] > tol * smax && sig[k] > 0.0) ++keep;
  if (keep == 0 || smax == 0.0) return Matrix::Zero(n, 1);
  const Matrix thinQ = qr.householderQ() * Matrix::Identity(n, rr);
  return thinQ * svd.matrixU().leftCols(keep) * sig.head(keep).asDiagonal();
}

FactoredPrimal default_initial(const SdpInstance& inst, std::uint64_t seed) {
  return seeded_unit_vector(inst.n, seed) * (std::sqrt(inst.tau) / 2.0);
}

SolveResult solve(const SdpInstance& inst, const SolverOptions& opts, const FactoredPrimal* warm,
                  const SolveCallbacks& cb) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  opts.validate();
  if (warm && warm->rows() != inst.n)
    throw std::invalid_argument("warm start row count does not match the instance dimension");

  const scaling::ScaleParams sp(opts.scale_A, opts.scale_C, inst.tau);
  const SdpInstance sinst = scaling::scale_instance(inst, sp);
  const Deadline deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(opts.time_limit));

  // scale factors between scaled and original residuals / values
  const double s_res = inst.tau / opts.scale_A;
  const double s_val = inst.tau / opts.scale_C;
  const double b_l1 = sinst.b.lpNorm<1>();

  Matrix Y = warm ? project_ball(*warm / std::sqrt(inst.tau), 1.0)
                  : default_initial(sinst, opts.seed);
  Vector p = Vector::Zero(inst.m);
  double beta = opts.beta0;
  double theta = 0.0;
  bool theta_ok = false;

  AdaptiveState state;
  SolveResult res;
  res.status = SolveStatus::IterationLimit;
  double feas_prev = std::numeric_limits<double>::quiet_NaN();

  for (long long k = 0; k < opts.maxiter_hallar; ++k) {
    HlrResult hlr = hlr_subproblem(sinst, Y, p, beta, opts, &state, deadline, &cb);
    Y = std::move(hlr.Y);
    res.counters.fista_calls += hlr.counters.fista_calls;
    res.counters.acg_iterations += hlr.counters.acg_iterations;
    res.counters.fw_calls += hlr.counters.fw_calls;
    res.counters.eig_skips += hlr.counters.eig_skips;

    const Vector resid = apply_A(sinst, Y) - sinst.b;
    p += beta * resid;

    const ThetaResult th = compute_theta(sinst, p, opts, &state);
    theta = th.theta;
    theta_ok = th.ok;

    const double pval = primal_value(sinst, Y);
    const double feas = feas_of(resid.norm(), b_l1);
    std::optional<double> dval, gap;
    if (th.ok) {
      dval = dual_value(sinst, p, theta);
      gap = gap_of(pval, *dval);
    }

    // termination needs the scaled and the unscaled residuals to pass
    bool done = feas <= opts.eps_pfeas && gap && *gap <= opts.eps_gap;
    if (done) {
      const double ufeas = feas_of(s_res * resid.norm(), s_res * b_l1);
      const double ugap = gap_of(s_val * pval, s_val * *dval);
      done = ufeas <= opts.eps_pfeas && ugap <= opts.eps_gap;
    }

    const double beta_used = beta;
    if (!done) beta = update_beta(beta, feas_prev, feas, opts);
    feas_prev = feas;
    Y = truncate_rank(Y, kRankTruncTol);

    IterRecord rec{k, Y.cols(), gap, feas, pval, dval, beta_used, hlr.steps};
    res.records.push_back(rec);
    if (cb.on_iteration) cb.on_iteration(rec);

    res.pval = pval;
    res.feas = feas;
    res.dval = dval;
    res.gap = gap;
    res.beta_final = beta_used;

    if (done) {
      res.status = SolveStatus::Optimal;
      break;
    }
    if (past(deadline)) {
      res.status = SolveStatus::TimeLimit;
      break;
    }
  }

  res.Y = scaling::unscale_primal(Y, sp);
  const DualPoint dual = scaling::unscale_dual(p, theta_ok ? theta : 0.0, sp);
  res.p = dual.p;
  res.theta = dual.theta;
  res.value = scaling::unscale_value(res.pval, sp);
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace hallar::solver
