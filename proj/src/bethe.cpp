#include "mdgas/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "mdgas/error.hpp"
#include "mdgas/newton.hpp"

namespace mdgas {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_boundary_phase(double eta) { return eta == 0.0 || eta == kPi; }

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  // eta and pi (N-1) are exact multiples of pi; snap rounding residue.
  if (std::abs(phi - kTwoPi) < 1e-12 || std::abs(phi) < 1e-12) return 0.0;
  if (std::abs(phi - kPi) < 1e-12) return kPi;
  return phi;
}

void check_quantum_numbers(std::size_t n, std::span<const double> qn) {
  if (n == 0) throw InvalidArgument("need at least one particle");
  if (qn.size() != n) throw InvalidArgument("expected one quantum number per particle");
  for (std::size_t j = 0; j < n; ++j) {
    const double twice = 2.0 * qn[j];
    if (twice != std::round(twice))
      throw InvalidArgument("quantum numbers must be integers or half-integers");
    const bool half = std::fmod(std::abs(twice), 2.0) == 1.0;
    if (half != (n % 2 == 0))
      throw InvalidArgument(n % 2 == 0 ? "even N needs half-integer quantum numbers"
                                       : "odd N needs integer quantum numbers");
    if (j > 0 && !(qn[j - 1] < qn[j]))
      throw InvalidArgument("quantum numbers must be distinct and increasing");
  }
}

// Shared log-form solve; theta(u) = 2 atan(u / c).
BetheState solve_log_form(BetheModel model, double coupling, double c, std::size_t n,
                          double box_length, std::span<const double> qn, double eta,
                          double offset, const BetheSolverOptions& opt) {
  if (!(box_length > 0.0)) throw InvalidArgument("box length must be positive");
  if (!is_boundary_phase(eta)) throw InvalidArgument("boundary phase must be 0 or pi");
  check_quantum_numbers(n, qn);

  const double L = box_length;
  Eigen::VectorXd target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = kTwoPi * qn[j] + offset;

  auto residual = [&](const Eigen::VectorXd& k) {
    Eigen::VectorXd f(n);
    for (std::size_t j = 0; j < n; ++j) {
      double s = k[j] * L - target[j];
      for (std::size_t l = 0; l < n; ++l)
        if (l != j) s += 2.0 * std::atan((k[j] - k[l]) / c);
      f[j] = s;
    }
    return f;
  };
  auto jacobian = [&](const Eigen::VectorXd& k) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      jac(j, j) = L;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == j) continue;
        const double u = k[j] - k[l];
        const double dtheta = 2.0 * c / (c * c + u * u);
        jac(j, j) += dtheta;
        jac(j, l) -= dtheta;
      }
    }
    return jac;
  };

  NewtonOptions nopt;
  nopt.max_iterations = opt.max_iterations;
  nopt.residual_tolerance = 1e-14 * std::max(1.0, target.lpNorm<Eigen::Infinity>());
  const NewtonResult res = damped_newton(residual, jacobian, target / L, nopt);

  BetheState st;
  st.model = model;
  st.coupling = coupling;
  st.box_length = L;
  st.boundary_phase = eta;
  st.quantum_numbers.assign(qn.begin(), qn.end());
  st.branch_offset = offset;
  st.iterations = res.iterations;
  st.momenta.assign(res.x.data(), res.x.data() + n);
  for (double k : st.momenta) {
    st.energy += k * k;
    st.total_momentum += k;
  }
  const auto r = bethe_residuals(st);
  st.max_residual = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  if (!(st.max_residual < opt.residual_tolerance)) {
    std::ostringstream os;
    os << "Bethe equations not solved to tolerance after " << res.iterations
       << " iterations (residual " << st.max_residual << ")";
    throw NonConvergence(os.str());
  }
  return st;
}

}  // namespace

std::vector<double> ground_state_quantum_numbers(std::size_t n) {
  std::vector<double> qn(n);
  for (std::size_t j = 0; j < n; ++j)
    qn[j] = static_cast<double>(j) - 0.5 * static_cast<double>(n - 1);
  return qn;
}

double fermion_branch_offset(std::size_t n, double eta) {
  return wrap_phase(eta - kPi * static_cast<double>(n - 1));
}

double dual_boundary_phase(std::size_t n) { return n % 2 == 0 ? kPi : 0.0; }

double swapped_boundary_phase(std::size_t n) { return n % 2 == 0 ? 0.0 : kPi; }

BetheState solve_bethe(std::size_t n, double box_length, double lambda,
                       std::span<const double> quantum_numbers, double eta,
                       const BetheSolverOptions& opt) {
  if (!(lambda > 0.0))
    throw InvalidArgument("attractive sector (lambda <= 0) is not supported by the Bethe solver");
  if (!is_boundary_phase(eta)) throw InvalidArgument("boundary phase must be 0 or pi");
  return solve_log_form(BetheModel::fermion, lambda, 1.0 / lambda, n, box_length,
                        quantum_numbers, eta, fermion_branch_offset(n, eta), opt);
}

BetheState solve_lieb_liniger(std::size_t n, double box_length, double c,
                              std::span<const double> quantum_numbers, double eta,
                              const BetheSolverOptions& opt) {
  if (!(c > 0.0)) throw InvalidArgument("Lieb-Liniger solver needs c > 0");
  return solve_log_form(BetheModel::lieb_liniger, c, c, n, box_length, quantum_numbers, eta,
                        eta, opt);
}

std::vector<double> bethe_residuals(const BetheState& st) {
  const std::size_t n = st.momenta.size();
  const double c = st.model == BetheModel::fermion ? 1.0 / st.coupling : st.coupling;
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> rhs = std::polar(1.0, st.boundary_phase);
    if (st.model == BetheModel::fermion && n % 2 == 1) rhs = -rhs;
    for (std::size_t l = 0; l < n; ++l) {
      if (st.model == BetheModel::lieb_liniger && l == j) continue;
      const double u = st.momenta[j] - st.momenta[l];
      rhs *= std::complex<double>(u, c) / std::complex<double>(u, -c);
    }
    const auto lhs = std::polar(1.0, st.momenta[j] * st.box_length);
    out[j] = std::abs(lhs / rhs - 1.0);
  }
  return out;
}

DualityReport duality_check(std::size_t n, double box_length, double lambda,
                            std::optional<double> fermion_eta) {
  if (!(lambda > 0.0)) throw InvalidArgument("duality check needs lambda > 0");
  DualityReport rep;
  rep.n = n;
  rep.box_length = box_length;
  rep.lambda = lambda;
  rep.boson_coupling = 1.0 / lambda;
  rep.fermion_eta = fermion_eta.value_or(dual_boundary_phase(n));
  rep.quantum_numbers = ground_state_quantum_numbers(n);
  rep.fermion = solve_bethe(n, box_length, lambda, rep.quantum_numbers, rep.fermion_eta);
  rep.boson = solve_lieb_liniger(n, box_length, rep.boson_coupling, rep.quantum_numbers, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    rep.max_abs_difference = std::max(
        rep.max_abs_difference, std::abs(rep.fermion.momenta[j] - rep.boson.momenta[j]));
  return rep;
}

std::vector<ScanRow> ground_state_scan(double density, double lambda,
                                       std::span<const std::size_t> sizes) {
  if (!(density > 0.0)) throw InvalidArgument("density must be positive");
  if (!(lambda > 0.0)) throw InvalidArgument("ground-state scan needs lambda > 0");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InvalidArgument("sizes must be positive");
    if (i > 0 && !(sizes[i - 1] < sizes[i])) throw InvalidArgument("sizes must increase");
  }
  std::vector<ScanRow> rows;
  for (std::size_t n : sizes) {
    const double L = static_cast<double>(n) / density;
    const auto qn = ground_state_quantum_numbers(n);
    const auto st = solve_bethe(n, L, lambda, qn, dual_boundary_phase(n));
    ScanRow row;
    row.n = n;
    row.box_length = L;
    row.energy_density = st.energy / L;
    for (double i : qn) row.free_energy_density += std::pow(kTwoPi * i / L, 2);
    row.free_energy_density /= L;
    rows.push_back(row);
  }
  return rows;
}

double boundary_twist_defect(const BetheState& st, double lambda, std::span<const double> x) {
  if (x.size() != st.momenta.size()) throw InvalidArgument("dimension mismatch");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (!(*hi - *lo < st.box_length))
    throw InvalidArgument("configuration must span less than the box length");
  const auto wf = BetheWavefunction::gaudin_fermion(st.momenta, lambda);
  const std::complex<double> twist = std::polar(1.0, st.boundary_phase);
  const auto v0 = wf.value(x);
  std::vector<double> shifted(x.begin(), x.end());
  // Leftmost particle carried once around the ring to the right end.
  shifted[lo - x.begin()] += st.box_length;
  double worst = std::abs(v0 - twist * wf.value(shifted));
  shifted.assign(x.begin(), x.end());
  // Rightmost particle carried back to the left end.
  shifted[hi - x.begin()] -= st.box_length;
  worst = std::max(worst, std::abs(wf.value(shifted) - twist * v0));
  return worst / wf.value_bound();
}

}  // namespace mdgas
