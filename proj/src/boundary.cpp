#include "mdgas/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mdgas/error.hpp"

namespace mdgas {

double BoundaryResidual::relative_max() const {
  return std::max(std::abs(derivative_jump), std::abs(value_jump_defect)) / scale;
}

AdjacentSectors sectors_at_contact(std::span<const double> base, std::size_t j,
                                   std::size_t k) {
  const std::size_t n = base.size();
  if (j >= n || k >= n || j == k) throw InvalidArgument("invalid particle pair");
  if (base[j] != base[k]) throw InvalidArgument("base point is not on the hyperplane x_j = x_k");

  std::vector<int> rest;
  for (std::size_t m = 0; m < n; ++m)
    if (m != j) rest.push_back(static_cast<int>(m));
  std::sort(rest.begin(), rest.end(), [&](int a, int b) { return base[a] < base[b]; });
  for (std::size_t r = 1; r < rest.size(); ++r)
    if (!(base[rest[r - 1]] < base[rest[r]]))
      throw DegenerateInput("spectator coordinates coincide; sector is ill-defined");

  const auto at = std::find(rest.begin(), rest.end(), static_cast<int>(k)) - rest.begin();
  std::vector<int> plus = rest;
  std::vector<int> minus = rest;
  plus.insert(plus.begin() + at + 1, static_cast<int>(j));
  minus.insert(minus.begin() + at, static_cast<int>(j));
  return {Permutation(std::move(plus)), Permutation(std::move(minus))};
}

BoundaryResidual bc_residual_offset(const ValueFunction& value,
                                    const GradientFunction& gradient, double lambda,
                                    std::size_t j, std::size_t k,
                                    std::span<const double> base, double offset) {
  if (!value) throw InvalidArgument("missing wavefunction");
  if (!gradient) throw InvalidArgument("missing derivative support");
  if (!(offset > 0.0)) throw InvalidArgument("offset must be positive");
  sectors_at_contact(base, j, k);  // validates the geometry

  std::vector<double> xp(base.begin(), base.end());
  std::vector<double> xm(base.begin(), base.end());
  xp[j] += 0.5 * offset;
  xp[k] -= 0.5 * offset;
  xm[j] -= 0.5 * offset;
  xm[k] += 0.5 * offset;

  const auto gp = gradient(xp);
  const auto gm = gradient(xm);
  const cplx dp = gp[j] - gp[k];
  const cplx dm = gm[j] - gm[k];
  const cplx vp = value(xp);
  const cplx vm = value(xm);
  BoundaryResidual r;
  r.derivative_jump = dp - dm;
  r.value_jump_defect = (vp - vm) - 2.0 * lambda * dm;
  r.scale = std::max({1.0, std::abs(vp), std::abs(vm), std::abs(dp), std::abs(dm)});
  return r;
}

}  // namespace mdgas
