#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mdgas/error.hpp"
#include "mdgas/permutation.hpp"

namespace mdgas {

using cplx = std::complex<double>;

/// Defect of the two contact conditions on the hyperplane x_j = x_k:
///   derivative_jump   = (d_j - d_k) chi |_{x_j = x_k + 0}  - (d_j - d_k) chi |_{x_j = x_k - 0}
///   value_jump_defect = chi|_{+0} - chi|_{-0} - 2 lambda (d_j - d_k) chi |_{-0}
/// `scale` bounds the size of the terms entering either line, so
/// |defect| / scale is a relative residual.
struct BoundaryResidual {
  cplx derivative_jump{};
  cplx value_jump_defect{};
  double scale = 1.0;

  double relative_max() const;
};

/// A wavefunction given sector by sector: the plane-wave formula valid on the
/// open region x_{Q(0)} < ... < x_{Q(N-1)} extends analytically to its closure,
/// which is how one-sided limits onto a hyperplane are taken.
template <class W>
concept SectorWavefunction = requires(const W& w, std::span<const double> x,
                                      const Permutation& q) {
  { w.particles() } -> std::convertible_to<std::size_t>;
  { w.value_in_sector(x, q) } -> std::convertible_to<cplx>;
  { w.gradient_in_sector(x, q) } -> std::convertible_to<std::vector<cplx>>;
  { w.value_bound() } -> std::convertible_to<double>;
  { w.derivative_bound() } -> std::convertible_to<double>;
};

/// Sectors adjacent to the hyperplane x_j = x_k at `base`: `plus` has x_k
/// immediately before x_j in the ordering, `minus` immediately after.
struct AdjacentSectors {
  Permutation plus;
  Permutation minus;
};

AdjacentSectors sectors_at_contact(std::span<const double> base, std::size_t j,
                                   std::size_t k);

template <SectorWavefunction W>
BoundaryResidual bc_residual(const W& w, double lambda, std::size_t j, std::size_t k,
                             std::span<const double> base) {
  const auto sectors = sectors_at_contact(base, j, k);
  if (base.size() != w.particles()) throw InvalidArgument("dimension mismatch");
  const auto gp = w.gradient_in_sector(base, sectors.plus);
  const auto gm = w.gradient_in_sector(base, sectors.minus);
  const cplx dp = gp[j] - gp[k];
  const cplx dm = gm[j] - gm[k];
  const cplx vp = w.value_in_sector(base, sectors.plus);
  const cplx vm = w.value_in_sector(base, sectors.minus);
  BoundaryResidual r;
  r.derivative_jump = dp - dm;
  r.value_jump_defect = (vp - vm) - 2.0 * lambda * dm;
  r.scale = w.value_bound() + (1.0 + 2.0 * std::abs(lambda)) * w.derivative_bound();
  return r;
}

using ValueFunction = std::function<cplx(std::span<const double>)>;
using GradientFunction = std::function<std::vector<cplx>(std::span<const double>)>;

/// Diagnostic path for functions that know nothing about sectors: the one-sided
/// values are taken at x_j - x_k = +offset and -offset around `base`.
/// An empty `gradient` is rejected.
BoundaryResidual bc_residual_offset(const ValueFunction& value,
                                    const GradientFunction& gradient, double lambda,
                                    std::size_t j, std::size_t k,
                                    std::span<const double> base, double offset);

}  // namespace mdgas
