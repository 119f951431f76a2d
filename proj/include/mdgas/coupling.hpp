#pragma once

#include "mdgas/error.hpp"

namespace mdgas {

/// Interaction strength of the momentum-dependent contact interaction,
/// in units 2m = hbar = 1. lambda > 0 is repulsive, lambda < 0 attractive.
class Coupling {
 public:
  explicit constexpr Coupling(double lambda) : lambda_(lambda) {}

  constexpr double lambda() const { return lambda_; }
  constexpr bool repulsive() const { return lambda_ > 0.0; }
  constexpr bool attractive() const { return lambda_ < 0.0; }

  /// Coupling c_B = 1/lambda of the delta-interaction boson gas that shares
  /// this model's fermion spectrum.
  double dual_boson() const {
    if (lambda_ == 0.0) throw InvalidArgument("dual coupling undefined at lambda = 0");
    return 1.0 / lambda_;
  }

 private:
  double lambda_;
};

}  // namespace mdgas
