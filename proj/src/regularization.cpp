#include "mdgas/regularization.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "mdgas/error.hpp"

namespace mdgas {

namespace {

constexpr double kPi = std::numbers::pi;

// n-th derivative of 1/(q^2 + a^2) via partial fractions in q -+ i a.
double lorentzian_derivative(int n, double q, double a) {
  const std::complex<double> zm(q, -a), zp(q, a);
  const double fact = std::tgamma(n + 1.0);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const auto diff = std::pow(zm, -(n + 1)) - std::pow(zp, -(n + 1));
  return (sign * fact * diff / std::complex<double>(0.0, 2.0 * a)).real();
}

void check_regulated(double lambda, double e_abs, double epsilon) {
  if (lambda == 0.0) throw InvalidArgument("lambda must be nonzero");
  if (!(e_abs > 0.0)) throw InvalidArgument("|E| must be positive");
  if (!(epsilon > 0.0))
    throw InvalidArgument(
        "regulator eps must be positive: at eps = 0 the integral diverges linearly in the cutoff");
}

}  // namespace

double regularized_closed_form(double lambda, double e_abs, double epsilon) {
  const double a = std::sqrt(e_abs);
  return -2.0 * lambda * a * std::exp(-epsilon * a);
}

double distributional_piece(double epsilon, double cutoff) {
  if (!(epsilon > 0.0)) throw InvalidArgument("eps must be positive");
  return std::sin(epsilon * cutoff) / (kPi * epsilon);
}

double distributional_piece_cesaro(double epsilon, double cutoff) {
  if (!(epsilon > 0.0) || !(cutoff > 0.0)) throw InvalidArgument("eps and cutoff must be positive");
  return (1.0 - std::cos(epsilon * cutoff)) / (kPi * epsilon * epsilon * cutoff);
}

QuadratureResult lorentzian_cosine_integral(double epsilon, double a,
                                            const LorentzianOptions& opt) {
  if (!(epsilon > 0.0) || !(a > 0.0)) throw InvalidArgument("eps and a must be positive");
  const double a2 = a * a;
  const auto f = [&](double q) { return std::cos(epsilon * q) / (q * q + a2); };
  const double period = 2.0 * kPi / epsilon;

  QuadratureResult total;
  total.converged = true;
  for (int p = 0; p < opt.periods; ++p) {
    const auto r = integrate_adaptive(f, p * period, (p + 1) * period, opt.quadrature);
    total.value += r.value;
    total.abs_error += r.abs_error;
    total.evaluations += r.evaluations;
    total.panels += r.panels;
    total.converged = total.converged && r.converged;
  }

  // integral_Q^inf e^{i eps q} g(q) dq = -e^{i eps Q} sum_n (-1)^n g^(n)(Q) / (i eps)^(n+1)
  const double q_end = opt.periods * period;
  const std::complex<double> ie(0.0, epsilon);
  std::complex<double> series = 0.0;
  std::complex<double> pow_ie = ie;
  for (int n = 0; n < 6; ++n, pow_ie *= ie) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    series += sign * lorentzian_derivative(n, q_end, a) / pow_ie;
  }
  const double tail = (-std::polar(1.0, epsilon * q_end) * series).real();
  total.value += tail;
  // Even integrand: double the half line.
  total.value *= 2.0;
  total.abs_error *= 2.0;
  return total;
}

RegularizedIntegral regularized_integral(double lambda, double e_abs, double epsilon,
                                         const LorentzianOptions& opt) {
  check_regulated(lambda, e_abs, epsilon);
  const auto lor = lorentzian_cosine_integral(epsilon, std::sqrt(e_abs), opt);
  RegularizedIntegral out;
  out.epsilon = epsilon;
  out.e_abs = e_abs;
  out.distributional_part = 0.0;
  out.lorentzian_part = -e_abs * lor.value / (2.0 * kPi);
  out.quadrature_error = lor.abs_error;
  out.value = 4.0 * lambda * (out.distributional_part + out.lorentzian_part);
  return out;
}

RichardsonResult extrapolated_integral(double lambda, double e_abs,
                                       const ExtrapolationOptions& opt) {
  check_regulated(lambda, e_abs, opt.epsilon0);
  return richardson_to_zero(
      [&](double eps) { return regularized_integral(lambda, e_abs, eps).value; }, opt.epsilon0,
      opt.max_levels, opt.rel_tol);
}

RichardsonResult extrapolated_integral_three_node(double lambda, double e_abs) {
  check_regulated(lambda, e_abs, 0.2);
  return richardson_to_zero(
      [&](double eps) { return regularized_integral(lambda, e_abs, eps).value; }, 0.2, 3);
}

RegularizedBoundState bound_state_energy_via_regularization(double lambda) {
  if (lambda == 0.0) throw InvalidArgument("lambda = 0 is the free model");
  if (lambda > 0.0)
    throw InvalidArgument("no bound state for lambda > 0: 1 = -2 lambda sqrt|E| has no solution");

  const auto excess = [&](double e_abs) { return extrapolated_integral(lambda, e_abs).value - 1.0; };
  double lo = 0.0;
  double hi = 100.0 / (lambda * lambda);
  if (!(excess(hi) > 0.0)) throw NonConvergence("bound-state bracket does not straddle the root");
  RegularizedBoundState out;
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double f = excess(mid);
    if (f > 0.0)
      hi = mid;
    else
      lo = mid;
    ++out.bisection_steps;
    if (out.bisection_steps > 200) throw NonConvergence("bisection did not terminate");
  }
  out.e_abs = 0.5 * (lo + hi);
  out.energy = -out.e_abs;
  return out;
}

}  // namespace mdgas
