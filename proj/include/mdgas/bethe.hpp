#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mdgas/wavefunction.hpp"

namespace mdgas {

enum class BetheModel { fermion, lieb_liniger };

/// Solution of the Bethe equations on a ring of length L.
///
/// Quantum numbers follow the Lieb-Liniger convention: integers for odd N,
/// half-integers for even N. The logarithmic form solved is
///   k_j L + sum_l theta(k_j - k_l) = 2 pi I_j + offset,
/// theta(u) = 2 atan(u / c), with c = 1/lambda for the fermion model.
struct BetheState {
  BetheModel model = BetheModel::fermion;
  double coupling = 0.0;  // lambda (fermion) or c (Lieb-Liniger)
  std::vector<double> momenta;
  double box_length = 0.0;
  double boundary_phase = 0.0;  // eta in {0, pi}
  std::vector<double> quantum_numbers;
  double branch_offset = 0.0;
  double energy = 0.0;
  double total_momentum = 0.0;
  int iterations = 0;
  double max_residual = 0.0;  // max_j |e^{i k_j L} / RHS_j - 1|
};

struct BetheSolverOptions {
  int max_iterations = 200;
  double residual_tolerance = 1e-12;
};

/// Evenly spaced block -(N-1)/2, ..., (N-1)/2.
std::vector<double> ground_state_quantum_numbers(std::size_t n);

/// Branch offset of the fermion model: the (-1)^N e^{i eta} prefactor and the
/// l = j factor of the Bethe product combine to eta - pi (N - 1), reduced to [0, 2 pi).
double fermion_branch_offset(std::size_t n, double eta);

/// Boundary phase under which the fermion Bethe equations coincide with the
/// periodic Lieb-Liniger ones at c = 1/lambda: 0 for odd N, pi for even N.
double dual_boundary_phase(std::size_t n);

/// The other assignment (eta = 0 for even N, pi for odd N).
double swapped_boundary_phase(std::size_t n);

/// Fermion model, lambda > 0. Throws InvalidArgument for lambda <= 0,
/// malformed quantum numbers or eta outside {0, pi}; NonConvergence if the
/// residual cannot be brought below tolerance.
BetheState solve_bethe(std::size_t n, double box_length, double lambda,
                       std::span<const double> quantum_numbers, double eta,
                       const BetheSolverOptions& opt = {});

/// Delta-interaction boson gas, c > 0, twist eta (0 = periodic).
BetheState solve_lieb_liniger(std::size_t n, double box_length, double c,
                              std::span<const double> quantum_numbers, double eta = 0.0,
                              const BetheSolverOptions& opt = {});

/// Multiplicative residuals |e^{i k_j L} / RHS_j - 1| with RHS_j the product
/// form of the Bethe equations for the state's model.
std::vector<double> bethe_residuals(const BetheState& state);

struct DualityReport {
  std::size_t n = 0;
  double box_length = 0.0;
  double lambda = 0.0;
  double boson_coupling = 0.0;
  double fermion_eta = 0.0;
  std::vector<double> quantum_numbers;
  BetheState fermion;
  BetheState boson;
  double max_abs_difference = 0.0;
};

/// Fermion roots at coupling lambda against Lieb-Liniger roots at c = 1/lambda,
/// both from the ground-state quantum numbers. The fermion boundary phase
/// defaults to dual_boundary_phase(n).
DualityReport duality_check(std::size_t n, double box_length, double lambda,
                            std::optional<double> fermion_eta = std::nullopt);

struct ScanRow {
  std::size_t n = 0;
  double box_length = 0.0;
  double energy_density = 0.0;       // E / L from the Bethe roots
  double free_energy_density = 0.0;  // sum (2 pi I_j / L)^2 / L
};

/// Ground-state energy density at fixed density for increasing N, fermion
/// model with the dual boundary phase.
std::vector<ScanRow> ground_state_scan(double density, double lambda,
                                       std::span<const std::size_t> sizes);

/// Twist defect of the fermion Gaudin eigenfunction built from the state's
/// momenta: |chi(x) - e^{i eta} chi(x + L e_m)| with m the leftmost particle,
/// and the same with the rightmost particle moved by -L, relative to
/// value_bound. The span of x must be below L. Vanishes when the momenta
/// describe an eigenfunction with boundary phase eta.
double boundary_twist_defect(const BetheState& state, double lambda,
                             std::span<const double> x);

}  // namespace mdgas
