#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mdgas/error.hpp"

namespace mdgas {

struct RichardsonResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |T(j,j) - T(j-1,j-1)| at exit
  std::size_t levels = 0;
  std::vector<double> steps;
  std::vector<double> samples;
  bool converged = false;
};

/// Polynomial extrapolation of f(h) to h = 0 from h_j = h0 / ratio^j,
/// eliminating h, h^2, ... in turn (Neville tableau). Stops once successive
/// diagonal entries agree to rel_tol, or after max_levels samples.
template <class F>
RichardsonResult richardson_to_zero(F&& f, double h0, std::size_t max_levels,
                                    double rel_tol = 0.0, double ratio = 2.0) {
  if (!(h0 > 0.0) || !(ratio > 1.0) || max_levels == 0)
    throw InvalidArgument("Richardson extrapolation needs h0 > 0, ratio > 1, levels >= 1");
  RichardsonResult out;
  std::vector<std::vector<double>> t;
  double h = h0;
  for (std::size_t j = 0; j < max_levels; ++j, h /= ratio) {
    out.steps.push_back(h);
    out.samples.push_back(f(h));
    std::vector<double> row{out.samples.back()};
    double factor = 1.0;
    for (std::size_t m = 1; m <= j; ++m) {
      factor *= ratio;
      row.push_back(row[m - 1] + (row[m - 1] - t[j - 1][m - 1]) / (factor - 1.0));
    }
    t.push_back(std::move(row));
    out.levels = j + 1;
    out.value = t[j][j];
    if (j > 0) {
      out.error_estimate = std::abs(t[j][j] - t[j - 1][j - 1]);
      if (rel_tol > 0.0 && out.error_estimate <= rel_tol * std::abs(out.value)) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace mdgas
