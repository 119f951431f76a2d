#pragma once

#include <functional>

namespace mdgas {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // sum of per-panel |K15 - G7|
  int evaluations = 0;
  int panels = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_panels = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b]: the panel
/// with the largest error estimate is bisected until the summed estimate
/// meets max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opt = {});

}  // namespace mdgas
