#pragma once

#include <Eigen/Dense>

namespace mdgas {

struct NewtonOptions {
  int max_iterations = 200;
  int max_halvings = 40;
  /// Stop once the residual's max-norm is at or below this.
  double residual_tolerance = 1e-14;
};

struct NewtonResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual_norm = 0.0;  // max-norm at exit
  bool converged = false;
};

/// Newton's method with an analytic Jacobian; each step is halved until the
/// residual 2-norm decreases. If no halving helps, iteration stops at the
/// current point (converged only if the tolerance is already met).
template <class Residual, class Jacobian>
NewtonResult damped_newton(Residual&& residual, Jacobian&& jacobian, Eigen::VectorXd x,
                           const NewtonOptions& opt = {}) {
  NewtonResult out;
  Eigen::VectorXd f = residual(x);
  for (int it = 0; it < opt.max_iterations; ++it) {
    out.iterations = it;
    if (f.lpNorm<Eigen::Infinity>() <= opt.residual_tolerance) {
      out.converged = true;
      break;
    }
    const Eigen::MatrixXd jac = jacobian(x);
    const Eigen::VectorXd step = jac.partialPivLu().solve(-f);
    if (!step.allFinite()) break;

    double t = 1.0;
    bool improved = false;
    const double norm0 = f.norm();
    for (int h = 0; h <= opt.max_halvings; ++h, t *= 0.5) {
      Eigen::VectorXd trial = x + t * step;
      Eigen::VectorXd ft = residual(trial);
      if (ft.allFinite() && ft.norm() < norm0) {
        x = std::move(trial);
        f = std::move(ft);
        improved = true;
        break;
      }
    }
    if (!improved) break;
    out.iterations = it + 1;
  }
  out.residual_norm = f.lpNorm<Eigen::Infinity>();
  if (out.residual_norm <= opt.residual_tolerance) out.converged = true;
  out.x = std::move(x);
  return out;
}

}  // namespace mdgas
