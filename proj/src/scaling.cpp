#include "hallar/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace hallar::scaling {

ScaleParams::ScaleParams(double a, double c, double t) : tau_a(a), tau_c(c), tau(t) {
  if (!(tau_a > 0.0) || !(tau_c > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("scaling parameters must be strictly positive");
}

SdpInstance scale_instance(const SdpInstance& inst, const ScaleParams& sp) {
  SdpInstance out;
  out.m = inst.m;
  out.n = inst.n;
  out.b = (sp.tau_a / sp.tau) * inst.b;
  out.tau = 1.0;
  out.mats.reserve(inst.mats.size());
  out.mats.push_back(inst.cost().scaled(sp.tau_c));
  for (Index l = 0; l < inst.m; ++l) out.mats.push_back(inst.constraint(l).scaled(sp.tau_a));
  return out;
}

Matrix unscale_primal(const Matrix& Yt, const ScaleParams& sp) {
  return std::sqrt(sp.tau) * Yt;
}

DualPoint unscale_dual(const Vector& pt, double thetat, const ScaleParams& sp) {
  DualPoint d;
  d.p = (sp.tau_a / sp.tau_c) * pt;
  d.theta = thetat / sp.tau_c;
  return d;
}

double unscale_value(double vt, const ScaleParams& sp) { return (sp.tau / sp.tau_c) * vt; }

double scale_beta(double beta, const ScaleParams& sp) {
  return (sp.tau * sp.tau_c / (sp.tau_a * sp.tau_a)) * beta;
}

double unscale_beta(double beta_t, const ScaleParams& sp) {
  return (sp.tau_a * sp.tau_a / (sp.tau * sp.tau_c)) * beta_t;
}

}  // namespace hallar::scaling
