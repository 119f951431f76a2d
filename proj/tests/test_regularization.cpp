#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mdgas/error.hpp"
#include "mdgas/regularization.hpp"

using namespace mdgas;

TEST_CASE("Lorentzian cosine integral against its closed form") {
  for (double a : {0.2, 1.0, 6.0})
    for (double eps : {0.2, 0.05, 0.003}) {
      const auto r = lorentzian_cosine_integral(eps, a);
      const double exact = std::numbers::pi * std::exp(-a * eps) / a;
      CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("regularized integral matches -2 lambda sqrt|E| exp(-eps sqrt|E|)") {
  for (double lambda : {-2.0, -0.5, 0.7})
    for (double e_abs : {0.05, 1.0, 9.0})
      for (double eps : {0.2, 0.1, 0.0125}) {
        const auto r = regularized_integral(lambda, e_abs, eps);
        CHECK(r.value == doctest::Approx(regularized_closed_form(lambda, e_abs, eps)).epsilon(1e-11));
        CHECK(r.distributional_part == 0.0);
      }
}

TEST_CASE("the constant piece oscillates but its Cesaro mean vanishes") {
  const double eps = 0.1;
  CHECK(std::abs(distributional_piece(eps, 1e4)) > 0.1);
  const double a = distributional_piece_cesaro(eps, 1e3);
  const double b = distributional_piece_cesaro(eps, 1e6);
  CHECK(std::abs(b) < std::abs(a));
  CHECK(std::abs(b) < 1e-4);
}

TEST_CASE("eps -> 0 extrapolation") {
  const auto full = extrapolated_integral(-1.0, 0.25);
  CHECK(full.converged);
  CHECK(full.value == doctest::Approx(1.0).epsilon(1e-12));
  const auto three = extrapolated_integral_three_node(-1.0, 0.25);
  CHECK(three.levels == 3);
  CHECK(std::abs(three.value - 1.0) < 1e-3);
  CHECK(std::abs(three.value - 1.0) > std::abs(full.value - 1.0));
}

TEST_CASE("bound-state energy from the regularized route") {
  for (double lambda : {-0.25, -0.5, -1.0, -2.0}) {
    const auto b = bound_state_energy_via_regularization(lambda);
    CHECK(b.energy == doctest::Approx(-1.0 / (4.0 * lambda * lambda)).epsilon(1e-10));
    CHECK(b.e_abs == -b.energy);
  }
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(regularized_integral(-1.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(regularized_integral(-1.0, 1.0, -0.1), InvalidArgument);
  CHECK_THROWS_AS(regularized_integral(-1.0, 0.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(bound_state_energy_via_regularization(0.5), InvalidArgument);
  CHECK_THROWS_AS(bound_state_energy_via_regularization(0.0), InvalidArgument);
}
