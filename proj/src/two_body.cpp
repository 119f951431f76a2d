#include "mdgas/two_body.hpp"

#include <cmath>

#include "mdgas/error.hpp"

namespace mdgas {

namespace {

int branch(double x, int side) {
  if (x > 0.0) return 1;
  if (x < 0.0) return -1;
  return side >= 0 ? 1 : -1;
}

void require_valid(const TwoBodyState& s, double lambda) {
  if (s.parity == Parity::odd) {
    if (lambda == 0.0) throw InvalidArgument("odd-parity state needs lambda != 0");
    if (std::abs(s.k) == 0.0)
      throw DegenerateInput("odd-parity state degenerates at k = 0");
  }
  if (s.is_bound()) {
    if (lambda >= 0.0) throw InvalidArgument("bound state requires lambda < 0");
    if (s.parity != Parity::odd) throw InvalidArgument("bound state has odd parity");
  }
}

}  // namespace

TwoBodyState scattering_state(Parity parity, double k) {
  return TwoBodyState{parity, cplx{k, 0.0}, k * k};
}

std::optional<TwoBodyState> bound_state(double lambda) {
  if (lambda == 0.0) throw InvalidArgument("lambda = 0 is the free model");
  if (lambda > 0.0) return std::nullopt;
  return TwoBodyState{Parity::odd, cplx{0.0, 1.0 / (2.0 * lambda)},
                      -1.0 / (4.0 * lambda * lambda)};
}

cplx eval_two_body(const TwoBodyState& s, double lambda, double x, int side) {
  require_valid(s, lambda);
  const double sg = branch(x, side);
  if (s.is_bound()) {
    const double a = std::abs(lambda);
    return sg * std::exp(-std::abs(x) / (2.0 * a)) / std::sqrt(2.0 * a);
  }
  if (s.parity == Parity::even) return std::cos(s.k * x);
  return std::sin(s.k * x) / (2.0 * lambda * s.k) + sg * std::cos(s.k * x);
}

cplx eval_two_body_derivative(const TwoBodyState& s, double lambda, double x, int side) {
  require_valid(s, lambda);
  const double sg = branch(x, side);
  if (s.is_bound()) {
    const double a = std::abs(lambda);
    return -std::exp(-std::abs(x) / (2.0 * a)) / (2.0 * a * std::sqrt(2.0 * a));
  }
  if (s.parity == Parity::even) return -s.k * std::sin(s.k * x);
  return std::cos(s.k * x) / (2.0 * lambda) - sg * s.k * std::sin(s.k * x);
}

TwoBodyWavefunction::TwoBodyWavefunction(TwoBodyState state, double lambda)
    : state_(state), lambda_(lambda) {
  require_valid(state_, lambda_);
}

// Sector [0,1] means x1 < x2, i.e. relative coordinate x1 - x2 on the -0+ side.
cplx TwoBodyWavefunction::value_in_sector(std::span<const double> x,
                                          const Permutation& sector) const {
  const int side = sector(0) == 0 ? -1 : +1;
  return eval_two_body(state_, lambda_, x[0] - x[1], side);
}

std::vector<cplx> TwoBodyWavefunction::gradient_in_sector(std::span<const double> x,
                                                          const Permutation& sector) const {
  const int side = sector(0) == 0 ? -1 : +1;
  const cplx d = eval_two_body_derivative(state_, lambda_, x[0] - x[1], side);
  return {d, -d};
}

double TwoBodyWavefunction::value_bound() const {
  if (state_.is_bound()) return 1.0 / std::sqrt(2.0 * std::abs(lambda_));
  if (state_.parity == Parity::even) return 1.0;
  return 1.0 + 1.0 / (2.0 * std::abs(lambda_ * state_.k));
}

double TwoBodyWavefunction::derivative_bound() const {
  if (state_.is_bound()) return value_bound() / std::abs(lambda_);
  return 2.0 * std::abs(state_.k) * value_bound();
}

}  // namespace mdgas
