#include <catch2/catch_amalgamated.hpp>

#include "ortho/residual.hpp"

using Catch::Approx;
using ortho::ModelParams;
using ortho::PdeKind;

TEST_CASE("hydrodynamic diffusion equation residual") {
  // the Gaussian satisfies the limit equation exactly; what remains is pure
  // second-order discretization error
  const ModelParams m{1.0, 0.7, 1.0};
  const auto r = ortho::pde_residual_detail(PdeKind::hydro, m, 1.0, 1e-3);
  REQUIRE(r.relative_extrapolated <= 1e-6);
}

TEST_CASE("fourth-order interior operator residual") {
  const ModelParams m{1.0, 0.3, 1.0};
  const auto r = ortho::pde_residual_detail(PdeKind::fourth_order, m, 1.0, 0.01);
  INFO("extrapolated " << r.relative_extrapolated << " order "
                       << r.observed_order);
  REQUIRE(r.relative_extrapolated <= 1e-3);
  REQUIRE(r.observed_order >= 1.65);
}

TEST_CASE("boundary operator residual") {
  const ModelParams m{1.0, 0.3, 1.0};
  const auto r = ortho::pde_residual_detail(PdeKind::boundary, m, 1.0, 4e-3);
  INFO("extrapolated " << r.relative_extrapolated << " order "
                       << r.observed_order);
  REQUIRE(r.relative_extrapolated <= 1e-3);
  REQUIRE(r.observed_order >= 1.65);
}

TEST_CASE("occupation operator residual for both variants") {
  const ModelParams m{1.0, 0.3, 1.0};
  for (auto variant : {ortho::OccupationVariant::paper,
                       ortho::OccupationVariant::symmetrized}) {
    const auto r =
        ortho::pde_residual_detail(PdeKind::occupation, m, 1.0, 4e-3, variant);
    INFO("variant " << (variant == ortho::OccupationVariant::paper
                            ? "paper"
                            : "symmetrized")
                    << " extrapolated " << r.relative_extrapolated << " order "
                    << r.observed_order);
    REQUIRE(r.relative_extrapolated <= 1e-3);
    REQUIRE(r.observed_order >= 1.65);
  }
}

TEST_CASE("probing the singular set raises a domain error") {
  REQUIRE_THROWS_AS(ortho::residual_detail::occupation_at(
                        1.0, ortho::OccupationVariant::paper, 1e-5, 1.0, 4e-3),
                    std::domain_error);
  const ModelParams m{1.0, 0.3, 1.0};
  REQUIRE_THROWS_AS(
      ortho::residual_detail::boundary_at(m, m.c * 1.0 - 1e-6, 1.0, 4e-3),
      std::domain_error);
}

TEST_CASE("report wrapper encodes residual and order") {
  const ModelParams m{1.0, 0.3, 1.0};
  const auto reports =
      ortho::pde_residual(PdeKind::boundary, m, 1.0, "boundary_pde", 4e-3, 1e-3);
  REQUIRE(reports.size() == 2);
  REQUIRE(reports[0].check == "boundary_pde_residual");
  REQUIRE(reports[0].passed);
  REQUIRE(reports[1].check == "boundary_pde_order_shortfall");
  REQUIRE(reports[1].passed);
}
