#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "mdgas/permutation.hpp"

namespace mdgas {

using cplx = std::complex<double>;

enum class Parity { even, odd };

/// Relative-motion eigenstate of h = -d^2/dx^2 + 4 lambda d/dx delta(x) d/dx.
/// Scattering states carry real k; the attractive bound state carries
/// k = i/(2 lambda).
struct TwoBodyState {
  Parity parity = Parity::even;
  cplx k{0.0, 0.0};
  double energy = 0.0;

  bool is_bound() const { return k.imag() != 0.0; }
};

/// chi'(0) at the contact is read as the mean of the one-sided derivatives.
inline constexpr double kContactDerivativeWeight = 0.5;

TwoBodyState scattering_state(Parity parity, double k);

/// Bound state for lambda < 0, empty for lambda > 0. Throws on lambda = 0.
std::optional<TwoBodyState> bound_state(double lambda);

/// chi_+(x) = cos(kx); chi_-(x) = sin(kx)/(2 lambda k) + sgn(x) cos(kx).
/// The bound state is sgn(x) exp(-|x|/(2|lambda|)) scaled to unit L2 norm.
///
/// `side` picks the branch of sgn(x) at x = 0 (+1 for 0+, -1 for -0+);
/// away from the origin it is ignored.
cplx eval_two_body(const TwoBodyState& state, double lambda, double x, int side = +1);
cplx eval_two_body_derivative(const TwoBodyState& state, double lambda, double x,
                              int side = +1);

/// The relative-motion state as a two-particle function chi(x1 - x2),
/// evaluable sector by sector for boundary-condition checks.
class TwoBodyWavefunction {
 public:
  TwoBodyWavefunction(TwoBodyState state, double lambda);

  std::size_t particles() const { return 2; }
  cplx value_in_sector(std::span<const double> x, const Permutation& sector) const;
  std::vector<cplx> gradient_in_sector(std::span<const double> x,
                                       const Permutation& sector) const;
  double value_bound() const;
  double derivative_bound() const;

 private:
  TwoBodyState state_;
  double lambda_;
};

}  // namespace mdgas
