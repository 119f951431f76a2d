#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mdgas/permutation.hpp"

namespace mdgas {

using cplx = std::complex<double>;

enum class Statistics { fermion, boson };

/// Permutation enumeration is bounded to N <= 8 (40320 plane waves).
inline constexpr std::size_t kMaxWavefunctionParticles = 8;

/// Fermion amplitudes of the Gaudin eigenfunction on x_1 < ... < x_N:
///   A_P = sgn(P) prod_{l<j} (i lambda (k_{P(j)} - k_{P(l)}) + 1).
/// Throws DegenerateInput for repeated momenta.
std::map<Permutation, cplx> gaudin_amplitudes(std::span<const double> momenta,
                                              double lambda);

/// Bethe-ansatz eigenfunction sum_P A_P(Q) exp(i sum_j k_{P(j)} x_{Q(j)}) on
/// the sector x_{Q(0)} < ... < x_{Q(N-1)}. Wedge amplitudes A_P are stored;
/// other sectors follow from the statistics: A_P(Q) = sgn(Q) A_P for fermions,
/// A_P(Q) = A_P for bosons.
class BetheWavefunction {
 public:
  BetheWavefunction(std::vector<double> momenta, const std::map<Permutation, cplx>& amplitudes,
                    Statistics statistics);

  static BetheWavefunction gaudin_fermion(std::vector<double> momenta, double lambda);
  static BetheWavefunction free_boson(std::vector<double> momenta);

  std::size_t particles() const { return momenta_.size(); }
  const std::vector<double>& momenta() const { return momenta_; }
  Statistics statistics() const { return statistics_; }
  double energy() const;
  cplx amplitude(const Permutation& p) const;

  /// Throws DegenerateInput when two coordinates coincide.
  cplx value(std::span<const double> x) const;
  std::vector<cplx> gradient(std::span<const double> x) const;

  cplx value_in_sector(std::span<const double> x, const Permutation& sector) const;
  std::vector<cplx> gradient_in_sector(std::span<const double> x,
                                       const Permutation& sector) const;

  /// Bounds on |chi| and on |(d_j - d_k) chi| from the triangle inequality.
  double value_bound() const;
  double derivative_bound() const;

 private:
  std::vector<double> momenta_;
  std::vector<Permutation> perms_;
  std::vector<cplx> amplitudes_;
  Statistics statistics_;
};

}  // namespace mdgas
