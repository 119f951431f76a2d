#include "mdgas/nonrel.hpp"

#include <cmath>
#include <numbers>

#include "mdgas/error.hpp"

namespace mdgas {

namespace {

void check_mass(double m, double c) {
  if (!(m > 0.0) || !(c > 0.0)) throw InvalidArgument("m and c must be positive");
}

}  // namespace

RelativisticParams RelativisticParams::with_mass(double m, double c) {
  RelativisticParams p;
  p.m = m;
  p.c = c;
  p.e0 = m * c * c;
  p.alpha = (m * c) * (m * c);
  return p;
}

bool RelativisticParams::mass_from_alpha_consistent(double rel_tol) const {
  const double mc2 = (m * c) * (m * c);
  return std::abs(mc2 - alpha) <= rel_tol * std::max(mc2, std::abs(alpha));
}

double dispersion(double k, double m, double c) {
  check_mass(m, c);
  return std::hypot(m * c * c, k * c);
}

double dispersion_remainder(double k, double m, double c) {
  const double e = dispersion(k, m, c);
  const double kinetic = (k * c) * (k * c) / (e + m * c * c);  // E_k - m c^2
  return kinetic - k * k / (2.0 * m);
}

BogoliubovPair bogoliubov(double k, double m, double c) {
  const double ratio = k * c / dispersion(k, m, c);
  return {std::sqrt(0.5 * (1.0 + ratio)), std::sqrt(0.5 * (1.0 - ratio))};
}

DiracLevels dirac_levels(double k, const RelativisticParams& p) {
  const double e = dispersion(k, p.m, p.c);
  return {e - p.e0, -(e + p.e0)};
}

double vertex_exact(const Momenta4& k, double m, double c) {
  const auto b1 = bogoliubov(k[0], m, c);
  const auto b2 = bogoliubov(k[1], m, c);
  const auto b3 = bogoliubov(k[2], m, c);
  const auto b4 = bogoliubov(k[3], m, c);
  const double f13 = b1.a_plus * b3.a_minus - b3.a_plus * b1.a_minus;
  const double f24 = b2.a_plus * b4.a_minus - b4.a_plus * b2.a_minus;
  return 0.25 * f13 * f24;
}

double vertex_leading(const Momenta4& k, double m, double c) {
  check_mass(m, c);
  const double s = 4.0 * m * c;
  return (k[0] - k[2]) * (k[1] - k[3]) / (s * s);
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("need >= 2 points for a slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidArgument("log-log fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

VertexScan vertex_expansion_scan(const Momenta4& k, std::span<const double> mc_values) {
  if ((k[0] - k[2]) * (k[1] - k[3]) == 0.0)
    throw InvalidArgument("degenerate momentum tuple: leading vertex vanishes");
  VertexScan scan;
  std::vector<double> xs, ys;
  for (double mc : mc_values) {
    VertexScanRow row;
    row.mc = mc;
    row.v_exact = vertex_exact(k, 1.0, mc);
    row.v_leading = vertex_leading(k, 1.0, mc);
    row.rel_error = std::abs(row.v_exact - row.v_leading) / std::abs(row.v_leading);
    scan.rows.push_back(row);
    xs.push_back(mc);
    ys.push_back(row.rel_error);
  }
  scan.slope = log_log_slope(xs, ys);
  return scan;
}

DispersionScan dispersion_scan(double k, double m, std::span<const double> c_values) {
  DispersionScan scan;
  std::vector<double> xs, ys;
  for (double c : c_values) {
    DispersionScanRow row;
    row.c = c;
    row.energy = dispersion(k, m, c);
    row.remainder = dispersion_remainder(k, m, c);
    scan.rows.push_back(row);
    xs.push_back(m * c);
    ys.push_back(std::abs(row.remainder));
  }
  scan.slope = log_log_slope(xs, ys);
  return scan;
}

double lambda_from_thirring(double g, double c, double m) {
  check_mass(m, c);
  const double s = 2.0 * m * c;
  return -g / (s * s);
}

double cb_from_sine_gordon(double beta, double c) {
  const double s = beta * c / 4.0;
  return -s * s;
}

double cb_from_phi4(double g_b, double m) {
  if (!(m > 0.0)) throw InvalidArgument("m must be positive");
  return 3.0 * g_b / (2.0 * m * m);
}

double sine_gordon_taylor_coeff(int n, double m, double c, double beta) {
  if (n < 2) throw InvalidArgument("sine-Gordon Taylor series starts at n = 2");
  check_mass(m, c);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n-1}
  const double mc = m * c;
  return sign * mc * mc * std::pow(beta, 2 * n - 2) / std::tgamma(2.0 * n + 1.0);
}

double sine_gordon_scaled_coeff(int n, double m, double c, double beta) {
  return sine_gordon_taylor_coeff(n, m, c, beta) / std::pow(2.0 * m, n);
}

CouplingMaps coupling_maps(const RelativisticParams& p) {
  CouplingMaps out;
  out.lambda_from_thirring = lambda_from_thirring(p.g, p.c, p.m);
  out.cb_from_sine_gordon = cb_from_sine_gordon(p.beta, p.c);
  out.cb_from_phi4 = cb_from_phi4(p.g_b, p.m);
  out.g_b_from_sine_gordon = sine_gordon_taylor_coeff(2, p.m, p.c, p.beta);
  out.cb_via_taylor = cb_from_phi4(out.g_b_from_sine_gordon, p.m);
  return out;
}

double coleman_check(double g, double c) {
  if (!(g > 0.0)) throw InvalidArgument("Coleman comparison needs g > 0 (lambda < 0)");
  if (!(c > 0.0)) throw InvalidArgument("c must be positive");
  const double pi = std::numbers::pi;
  const double lambda = lambda_from_thirring(g, c);
  const double beta = std::sqrt(4.0 * pi * pi / g);
  return lambda * cb_from_sine_gordon(beta, c);
}

double coleman_full(double g, double c) {
  if (!(g > 0.0)) throw InvalidArgument("Coleman comparison needs g > 0 (lambda < 0)");
  if (!(c > 0.0)) throw InvalidArgument("c must be positive");
  const double pi = std::numbers::pi;
  const double lambda = lambda_from_thirring(g, c);
  const double beta = std::sqrt(4.0 * pi / (1.0 + g / pi));
  return lambda * cb_from_sine_gordon(beta, c);
}

}  // namespace mdgas
