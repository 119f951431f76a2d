#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mdgas/bethe.hpp"
#include "mdgas/error.hpp"

using namespace mdgas;

namespace {

constexpr double kPi = std::numbers::pi;

// Bethe equations in product form, written out directly:
// fermion  e^{i k_j L} = (-1)^N e^{i eta} prod_{l=1..N} (k_j - k_l + i/lambda)/(k_j - k_l - i/lambda)
// boson    e^{i k_j L} = e^{i eta} prod_{l != j} (k_j - k_l + i c)/(k_j - k_l - i c)
double product_form_residual(const std::vector<double>& k, double L, double g, bool fermion,
                             double eta) {
  const std::size_t n = k.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> rhs = std::polar(1.0, eta);
    if (fermion && n % 2 == 1) rhs = -rhs;
    const double c = fermion ? 1.0 / g : g;
    for (std::size_t l = 0; l < n; ++l) {
      if (!fermion && l == j) continue;
      rhs *= std::complex<double>(k[j] - k[l], c) / std::complex<double>(k[j] - k[l], -c);
    }
    worst = std::max(worst, std::abs(std::polar(1.0, k[j] * L) / rhs - 1.0));
  }
  return worst;
}

// Symmetric N = 2 ground state k = (-q, q): q L + 2 atan(2 q / c) = pi, by bisection.
double two_particle_root(double L, double c) {
  double lo = 0.0, hi = kPi / L;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * L + 2.0 * std::atan(2.0 * mid / c) > kPi ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("ground-state quantum numbers") {
  CHECK(ground_state_quantum_numbers(3) == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(ground_state_quantum_numbers(4) == std::vector<double>{-1.5, -0.5, 0.5, 1.5});
}

TEST_CASE("branch offset and boundary phases") {
  CHECK(fermion_branch_offset(3, 0.0) == doctest::Approx(0.0));
  CHECK(fermion_branch_offset(2, kPi) == doctest::Approx(0.0));
  CHECK(fermion_branch_offset(2, 0.0) == doctest::Approx(kPi));
  CHECK(dual_boundary_phase(4) == kPi);
  CHECK(dual_boundary_phase(5) == 0.0);
  CHECK(swapped_boundary_phase(4) == 0.0);
}

TEST_CASE("single particle is a free plane wave") {
  const std::vector<double> qn{2.0};
  const auto s = solve_bethe(1, 5.0, 1.0, qn, 0.0);
  CHECK(s.momenta[0] == doctest::Approx(2.0 * kPi * 2.0 / 5.0).epsilon(1e-14));
  const auto t = solve_bethe(1, 5.0, 1.0, qn, kPi);
  CHECK(t.momenta[0] == doctest::Approx((4.0 * kPi + kPi) / 5.0).epsilon(1e-14));
}

TEST_CASE("two-particle roots against bisection") {
  for (double c : {0.3, 1.0, 4.0}) {
    const double L = 7.0;
    const double q = two_particle_root(L, c);
    const auto ll = solve_lieb_liniger(2, L, c, ground_state_quantum_numbers(2));
    CHECK(ll.momenta[0] == doctest::Approx(-q).epsilon(1e-13));
    CHECK(ll.momenta[1] == doctest::Approx(q).epsilon(1e-13));
    const auto f = solve_bethe(2, L, 1.0 / c, ground_state_quantum_numbers(2), kPi);
    CHECK(f.momenta[1] == doctest::Approx(q).epsilon(1e-13));
  }
}

TEST_CASE("solutions satisfy the product-form equations") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (double lambda : {0.25, 1.0, 4.0})
      for (double eta : {0.0, kPi}) {
        const auto s = solve_bethe(n, 10.0, lambda, ground_state_quantum_numbers(n), eta);
        CHECK(product_form_residual(s.momenta, 10.0, lambda, true, eta) < 1e-12);
        CHECK(s.max_residual < 1e-12);
        const auto b = solve_lieb_liniger(n, 10.0, 1.0 / lambda, ground_state_quantum_numbers(n), eta);
        CHECK(product_form_residual(b.momenta, 10.0, 1.0 / lambda, false, eta) < 1e-12);
      }
}

TEST_CASE("excited states and energy bookkeeping") {
  const std::vector<double> qn{-1.0, 0.0, 2.0};
  const auto s = solve_bethe(3, 8.0, 0.6, qn, 0.0);
  double e = 0.0, p = 0.0;
  for (double k : s.momenta) {
    e += k * k;
    p += k;
  }
  CHECK(s.energy == doctest::Approx(e).epsilon(1e-14));
  CHECK(s.total_momentum == doctest::Approx(p).epsilon(1e-12));
  // Summing the log form over j cancels the odd phase shifts.
  CHECK(p * 8.0 == doctest::Approx(2.0 * kPi * 1.0));
  CHECK(product_form_residual(s.momenta, 8.0, 0.6, true, 0.0) < 1e-12);
}

TEST_CASE("duality under the dual phase, mismatch under the swapped phase") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (double lambda : {0.25, 1.0, 4.0}) {
      const auto r = duality_check(n, 10.0, lambda);
      CHECK(r.max_abs_difference <= 1e-10);
      CHECK(r.boson_coupling == doctest::Approx(1.0 / lambda));
      const auto w = duality_check(n, 10.0, lambda, swapped_boundary_phase(n));
      CHECK(w.max_abs_difference > 1e-2);
    }
}

TEST_CASE("solved momenta make the Gaudin function twisted-periodic") {
  const std::vector<double> x{0.4, 2.9, 5.1, 7.3};
  for (double eta : {0.0, kPi}) {
    const auto s = solve_bethe(4, 10.0, 0.8, ground_state_quantum_numbers(4), eta);
    CHECK(boundary_twist_defect(s, 0.8, x) < 1e-12);
    auto wrong = s;
    wrong.boundary_phase = kPi - eta;
    CHECK(boundary_twist_defect(wrong, 0.8, x) > 1e-3);
  }
  const std::vector<double> wide{0.0, 3.0, 6.0, 10.5};
  const auto s = solve_bethe(4, 10.0, 0.8, ground_state_quantum_numbers(4), kPi);
  CHECK_THROWS_AS(boundary_twist_defect(s, 0.8, wide), InvalidArgument);
}

TEST_CASE("strong boson coupling approaches free fermions") {
  const auto s = solve_lieb_liniger(3, 10.0, 1e6, ground_state_quantum_numbers(3));
  CHECK(s.momenta[2] == doctest::Approx(2.0 * kPi / 10.0).epsilon(1e-5));
}

TEST_CASE("validation") {
  const auto qn3 = ground_state_quantum_numbers(3);
  CHECK_THROWS_AS(solve_bethe(3, 10.0, -1.0, qn3, 0.0), InvalidArgument);
  CHECK_THROWS_AS(solve_bethe(3, 10.0, 0.0, qn3, 0.0), InvalidArgument);
  CHECK_THROWS_AS(solve_bethe(3, 10.0, 1.0, qn3, 1.0), InvalidArgument);
  CHECK_THROWS_AS(solve_bethe(3, -1.0, 1.0, qn3, 0.0), InvalidArgument);
  const std::vector<double> half{-0.5, 0.5, 1.5};
  CHECK_THROWS_AS(solve_bethe(3, 10.0, 1.0, half, 0.0), InvalidArgument);
  const std::vector<double> repeated{-0.5, -0.5};
  CHECK_THROWS_AS(solve_bethe(2, 10.0, 1.0, repeated, 0.0), InvalidArgument);
  CHECK_THROWS_AS(solve_lieb_liniger(3, 10.0, -2.0, qn3), InvalidArgument);
  const std::vector<std::size_t> bad{8, 4};
  CHECK_THROWS_AS(ground_state_scan(1.0, 1.0, bad), InvalidArgument);
}

TEST_CASE("ground-state scan rows") {
  const std::vector<std::size_t> sizes{4, 8};
  const auto rows = ground_state_scan(0.5, 1.0, sizes);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].box_length == doctest::Approx(16.0));
  double free = 0.0;
  for (double i : ground_state_quantum_numbers(8)) free += std::pow(2.0 * kPi * i / 16.0, 2);
  CHECK(rows[1].free_energy_density == doctest::Approx(free / 16.0).epsilon(1e-14));
  CHECK(rows[1].energy_density < rows[1].free_energy_density);
}
