#pragma once

#include <cstddef>

#include "mdgas/quadrature.hpp"
#include "mdgas/richardson.hpp"

namespace mdgas {

/// I(eps, |E|) = 4 lambda * integral dq/(2 pi) cos(eps q) q^2 / (q^2 + |E|),
/// split as q^2/(q^2+|E|) = 1 - |E|/(q^2+|E|). The constant piece contributes
/// sin(eps Lambda)/(pi eps) at cutoff Lambda, whose Cesaro mean vanishes; the
/// Lorentzian piece converges absolutely and is integrated numerically.
struct RegularizedIntegral {
  double epsilon = 0.0;
  double e_abs = 0.0;
  double value = 0.0;
  double distributional_part = 0.0;  // Cesaro limit of the constant piece
  double lorentzian_part = 0.0;      // -|E|/(2 pi) * integral cos(eps q)/(q^2+|E|) over R
  double quadrature_error = 0.0;     // estimate for the Lorentzian integral over R
};

/// -2 lambda sqrt(|E|) exp(-eps sqrt(|E|)).
double regularized_closed_form(double lambda, double e_abs, double epsilon);

/// integral_{-Lambda}^{Lambda} dq/(2 pi) cos(eps q) = sin(eps Lambda) / (pi eps).
double distributional_piece(double epsilon, double cutoff);

/// Mean of distributional_piece over cutoffs in [0, Lambda]:
/// (1 - cos(eps Lambda)) / (pi eps^2 Lambda), O(1/Lambda).
double distributional_piece_cesaro(double epsilon, double cutoff);

struct LorentzianOptions {
  int periods = 64;  // cos periods integrated before the asymptotic tail
  QuadratureOptions quadrature{1e-16, 1e-14, 4000};
};

/// integral_R cos(eps q) / (q^2 + a^2) dq by per-period adaptive quadrature
/// plus an integration-by-parts tail beyond `periods` periods.
QuadratureResult lorentzian_cosine_integral(double epsilon, double a,
                                            const LorentzianOptions& opt = {});

/// Throws InvalidArgument for eps <= 0: without the regulator the integral
/// diverges linearly in the cutoff.
RegularizedIntegral regularized_integral(double lambda, double e_abs, double epsilon,
                                         const LorentzianOptions& opt = {});

struct ExtrapolationOptions {
  double epsilon0 = 0.2;
  std::size_t max_levels = 16;
  double rel_tol = 1e-13;
};

/// eps -> 0 limit of regularized_integral by a halving Richardson tableau.
RichardsonResult extrapolated_integral(double lambda, double e_abs,
                                       const ExtrapolationOptions& opt = {});

/// Order-2 extrapolation from the three nodes eps = 0.2, 0.1, 0.05.
RichardsonResult extrapolated_integral_three_node(double lambda, double e_abs);

struct RegularizedBoundState {
  double energy = 0.0;
  double e_abs = 0.0;
  int bisection_steps = 0;
};

/// Solves 1 = lim_{eps->0} I(eps, |E|) by bisection on |E| in (0, 100/lambda^2],
/// using the extrapolated quadrature (not the closed form). lambda < 0 only;
/// lambda >= 0 has no solution and throws InvalidArgument.
RegularizedBoundState bound_state_energy_via_regularization(double lambda);

}  // namespace mdgas
