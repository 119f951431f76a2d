#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "mdgas/wavefunction.hpp"

namespace mdgas {

/// |-Laplacian chi - E chi| by central second differences with step h,
/// relative to value_bound * max(1, E). `x` must be at least N h away
/// from every hyperplane x_j = x_k.
double schrodinger_residual(const BetheWavefunction& w, std::span<const double> x,
                            double h = 1e-4);

struct GaudinSweepOptions {
  std::size_t n = 3;
  std::size_t draws = 50;
  double k_max = 3.0;
  double lambda_min = 0.1;
  double lambda_max = 10.0;
  double fd_step = 1e-4;
  std::uint64_t seed = 0;
};

struct GaudinSweepReport {
  std::size_t n = 0;
  std::size_t draws = 0;
  std::size_t hyperplanes_checked = 0;
  double max_derivative_jump = 0.0;  // relative to BoundaryResidual::scale
  double max_value_jump_defect = 0.0;
  double max_schrodinger_residual = 0.0;
};

/// Random momenta in [-k_max, k_max], lambda in [lambda_min, lambda_max]; for
/// every draw the boundary conditions are checked on each hyperplane between
/// a random sector and its N-1 neighbours, and the free equation at a random
/// interior point of that sector.
GaudinSweepReport gaudin_sweep(const GaudinSweepOptions& opt);

}  // namespace mdgas
