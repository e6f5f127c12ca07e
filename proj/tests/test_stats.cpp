#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ortho/quadrature.hpp"
#include "ortho/rng.hpp"
#include "ortho/stats.hpp"

using Catch::Approx;

TEST_CASE("adaptive quadrature on known integrals") {
  REQUIRE(ortho::integrate([](double x) { return std::exp(-x * x); }, -8.0,
                           8.0) == Approx(std::sqrt(M_PI)).epsilon(1e-10));
  REQUIRE(ortho::integrate([](double x) { return std::cos(x); }, 0.0, 1.0) ==
          Approx(std::sin(1.0)).epsilon(1e-12));
  // rotated-square helper: constant integrand integrates to the square area
  const double area = ortho::integrate_rotated_square(
      [](double, double) { return 1.0; }, 1.5);
  REQUIRE(area == Approx(2.0 * 1.5 * 1.5).epsilon(1e-9));
}

TEST_CASE("empirical characteristic function basics") {
  std::vector<double> xs = {0.1, -0.4, 0.7};
  std::vector<double> ys = {0.2, 0.0, -0.3};
  const auto at_zero = ortho::empirical_cf(xs, ys, 0.0, 0.0);
  REQUIRE(at_zero.value.real() == 1.0);
  REQUIRE(at_zero.value.imag() == 0.0);
  const auto plus = ortho::empirical_cf(xs, ys, 0.7, -1.1);
  const auto minus = ortho::empirical_cf(xs, ys, -0.7, 1.1);
  REQUIRE(plus.value.real() == Approx(minus.value.real()).margin(1e-15));
  REQUIRE(plus.value.imag() == Approx(-minus.value.imag()).margin(1e-15));
  REQUIRE(plus.std_error == Approx(1.0 / std::sqrt(3.0)));
  REQUIRE_THROWS_AS(ortho::empirical_cf(std::vector<double>{}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("one-sample KS distance") {
  SECTION("samples from the CDF itself stay within the Kolmogorov band") {
    ortho::RngStream rng(5, 0);
    const std::size_t n = 100000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = rng.next_double();
    const double d =
        ortho::ks_distance(xs, [](double v) { return std::clamp(v, 0.0, 1.0); });
    REQUIRE(d <= 1.95 / std::sqrt(static_cast<double>(n)));
  }
  SECTION("identical constants against the matching step CDF give zero") {
    std::vector<double> xs(50, 0.75);
    const double d =
        ortho::ks_distance(xs, [](double v) { return v >= 0.75 ? 1.0 : 0.0; });
    REQUIRE(d == 0.0);
  }
}

TEST_CASE("two-sample KS") {
  std::vector<double> a = {1.0, 2.0, 3.0};
  REQUIRE(ortho::ks_two_sample(a, a) == 0.0);
  std::vector<double> b = {10.0, 11.0};
  REQUIRE(ortho::ks_two_sample(a, b) == 1.0);
  REQUIRE(ortho::kolmogorov_q(0.0) == 1.0);
  REQUIRE(ortho::kolmogorov_q(0.5) > ortho::kolmogorov_q(1.0));
  REQUIRE(ortho::kolmogorov_q(4.0) < 1e-10);
}

TEST_CASE("chi-square comparator") {
  // exact match passes comfortably
  std::vector<std::int64_t> obs = {100, 200, 300, 400};
  std::vector<double> exp = {100.0, 200.0, 300.0, 400.0};
  auto r = ortho::chi_square_test(obs, exp);
  REQUIRE(r.passed);
  REQUIRE(r.statistic == 0.0);
  REQUIRE(r.dof == 3);
  // bins under the validity threshold are dropped
  std::vector<std::int64_t> obs2 = {100, 200, 3};
  std::vector<double> exp2 = {100.0, 200.0, 2.0};
  auto r2 = ortho::chi_square_test(obs2, exp2);
  REQUIRE(r2.bins_used == 2);
  // a gross mismatch fails
  std::vector<std::int64_t> obs3 = {500, 100, 100};
  std::vector<double> exp3 = {233.0, 233.0, 234.0};
  REQUIRE_FALSE(ortho::chi_square_test(obs3, exp3).passed);
}
