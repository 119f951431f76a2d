#include "mdgas/gaudin_check.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "mdgas/boundary.hpp"
#include "mdgas/error.hpp"

namespace mdgas {

double schrodinger_residual(const BetheWavefunction& w, std::span<const double> x, double h) {
  if (x.size() != w.particles()) throw InvalidArgument("dimension mismatch");
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  std::vector<double> p(x.begin(), x.end());
  const cplx centre = w.value(p);
  cplx laplacian = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    const double xm = p[m];
    p[m] = xm + h;
    const cplx up = w.value(p);
    p[m] = xm - h;
    const cplx down = w.value(p);
    p[m] = xm;
    laplacian += (up - 2.0 * centre + down) / (h * h);
  }
  const double e = w.energy();
  return std::abs(-laplacian - e * centre) / (w.value_bound() * std::max(1.0, e));
}

GaudinSweepReport gaudin_sweep(const GaudinSweepOptions& opt) {
  if (opt.n < 2 || opt.n > kMaxWavefunctionParticles)
    throw InvalidArgument("particle number must lie in [2, 8]");
  if (!(opt.k_max > 0.0)) throw InvalidArgument("k_max must be positive");
  if (!(opt.lambda_min > 0.0) || opt.lambda_max < opt.lambda_min)
    throw InvalidArgument("need 0 < lambda_min <= lambda_max");

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> k_dist(-opt.k_max, opt.k_max);
  std::uniform_real_distribution<double> lambda_dist(opt.lambda_min, opt.lambda_max);
  std::uniform_real_distribution<double> gap_dist(0.2, 1.2);

  const std::size_t n = opt.n;
  GaudinSweepReport rep;
  rep.n = n;
  rep.draws = opt.draws;
  for (std::size_t d = 0; d < opt.draws; ++d) {
    std::vector<double> k(n);
    for (;;) {
      for (auto& v : k) v = k_dist(rng);
      std::vector<double> s = k;
      std::sort(s.begin(), s.end());
      bool distinct = true;
      for (std::size_t i = 1; i < n; ++i) distinct = distinct && s[i] - s[i - 1] > 1e-6;
      if (distinct) break;
    }
    const double lambda = lambda_dist(rng);
    const auto w = BetheWavefunction::gaudin_fermion(k, lambda);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    // Interior point of the sector x_{order[0]} < ... < x_{order[n-1]}.
    std::vector<double> ordered(n);
    ordered[0] = gap_dist(rng) - 1.0;
    for (std::size_t i = 1; i < n; ++i) ordered[i] = ordered[i - 1] + gap_dist(rng);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[order[i]] = ordered[i];
    rep.max_schrodinger_residual =
        std::max(rep.max_schrodinger_residual, schrodinger_residual(w, x, opt.fd_step));

    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<double> base = x;
      const double mid = 0.5 * (ordered[i] + ordered[i + 1]);
      base[order[i]] = mid;
      base[order[i + 1]] = mid;
      const auto r = bc_residual(w, lambda, order[i + 1], order[i], base);
      rep.max_derivative_jump = std::max(rep.max_derivative_jump, std::abs(r.derivative_jump) / r.scale);
      rep.max_value_jump_defect =
          std::max(rep.max_value_jump_defect, std::abs(r.value_jump_defect) / r.scale);
      ++rep.hyperplanes_checked;
    }
  }
  return rep;
}

}  // namespace mdgas
