#pragma once

#include <array>
#include <span>
#include <vector>

namespace mdgas {

/// Parameters of the relativistic field theories whose non-relativistic limits
/// map onto the many-body models. E0 is the reference energy of the Dirac
/// Hamiltonian; the limit is taken at E0 = m c^2.
struct RelativisticParams {
  double m = 0.5;
  double c = 1.0;
  double e0 = 0.5;   // m c^2 by default
  double g = 0.0;     // Thirring
  double alpha = 0.25;  // sine-Gordon, (m c)^2 = alpha when the mass is generated
  double beta = 1.0;
  double g_b = 0.0;   // phi^4

  static RelativisticParams with_mass(double m, double c);
  bool mass_from_alpha_consistent(double rel_tol = 1e-12) const;
};

struct BogoliubovPair {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// E_k = sqrt((m c^2)^2 + (k c)^2).
double dispersion(double k, double m, double c);

/// E_k - m c^2 - k^2 / (2m), evaluated without cancelling m c^2.
double dispersion_remainder(double k, double m, double c);

/// a_pm(k) = sqrt((1 +- k c / E_k) / 2).
BogoliubovPair bogoliubov(double k, double m, double c);

/// Levels of the free Dirac Hamiltonian relative to E0: the positive branch
/// E_k - E0 and the negative branch -(E_k + E0).
struct DiracLevels {
  double positive = 0.0;
  double negative = 0.0;
};

DiracLevels dirac_levels(double k, const RelativisticParams& p);

using Momenta4 = std::array<double, 4>;

/// Interaction vertex
///   v = 1/4 [a+(k1)a+(k2)a-(k3)a-(k4) + a+(k3)a+(k4)a-(k1)a-(k2)
///            - a+(k3)a+(k2)a-(k1)a-(k4) - a+(k1)a+(k4)a-(k3)a-(k2)],
/// evaluated in its factored form
///   v = 1/4 [a+(k1)a-(k3) - a+(k3)a-(k1)] [a+(k2)a-(k4) - a+(k4)a-(k2)]
/// so the zeros at k1 = k3 and k2 = k4 are exact.
double vertex_exact(const Momenta4& k, double m, double c);

/// (k1 - k3)(k2 - k4) / (4 m c)^2.
double vertex_leading(const Momenta4& k, double m, double c);

struct VertexScanRow {
  double mc = 0.0;
  double v_exact = 0.0;
  double v_leading = 0.0;
  double rel_error = 0.0;
};

struct VertexScan {
  std::vector<VertexScanRow> rows;
  double slope = 0.0;  // d log(rel_error) / d log(mc)
};

/// The vertex depends on m and c only through m c; rows use m = 1, c = mc.
VertexScan vertex_expansion_scan(const Momenta4& k, std::span<const double> mc_values);

struct DispersionScanRow {
  double c = 0.0;
  double energy = 0.0;
  double remainder = 0.0;
};

struct DispersionScan {
  std::vector<DispersionScanRow> rows;
  double slope = 0.0;  // d log|remainder| / d log(m c) at fixed m
};

DispersionScan dispersion_scan(double k, double m, std::span<const double> c_values);

/// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

struct CouplingMaps {
  double lambda_from_thirring = 0.0;  // -g / (2 m c)^2
  double cb_from_sine_gordon = 0.0;   // -(beta c / 4)^2
  double cb_from_phi4 = 0.0;          // 3 g_B / (2 m^2)
  double g_b_from_sine_gordon = 0.0;  // n = 2 Taylor coefficient, -(m c)^2 beta^2 / 4!
  double cb_via_taylor = 0.0;         // 3 g_B / (2 m^2) at that g_B
};

double lambda_from_thirring(double g, double c, double m = 0.5);
double cb_from_sine_gordon(double beta, double c);
double cb_from_phi4(double g_b, double m);

CouplingMaps coupling_maps(const RelativisticParams& p);

/// (-1)^{n-1} (m c)^2 beta^{2n-2} / (2n)!, n >= 2.
double sine_gordon_taylor_coeff(int n, double m, double c, double beta);

/// Coefficient of the n-th term after phi -> (Phi + Phi^dag)/sqrt(2m):
/// taylor_coeff / (2m)^n, proportional to m^{2-n}.
double sine_gordon_scaled_coeff(int n, double m, double c, double beta);

/// lambda * c_B with lambda = -g/c^2, beta^2 = 4 pi^2 / g and c_B = -(beta c/4)^2.
/// Equals pi^2/4 for every g > 0.
double coleman_check(double g, double c);

/// Same product at finite g, using 4 pi / beta^2 = 1 + g / pi in full.
double coleman_full(double g, double c);

}  // namespace mdgas
