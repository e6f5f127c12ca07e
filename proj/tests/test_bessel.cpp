#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ortho/bessel.hpp"

using Catch::Approx;

namespace {

// Reference oracle: ascending series in extended precision, summed until the
// terms fall below 1e-24 relative. Independent of the library path, which
// switches methods and works in double.
long double i0_reference(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k));
    sum += term;
    if (term < sum * 1e-24L) break;
  }
  return sum;
}

long double i1_reference(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 0.5L * x, sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + 1));
    sum += term;
    if (term < sum * 1e-24L) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("modified Bessel I0 against the series oracle") {
  REQUIRE(ortho::bessel_i0(0.0) == 1.0);
  const double ref1 = static_cast<double>(i0_reference(1.0L));
  REQUIRE(std::abs(ref1 - 1.266065877752008) < 5e-15);
  REQUIRE(ortho::bessel_i0(1.0) == Approx(ref1).epsilon(1e-12));

  // Cross-check of the series against the large-argument expansion head at 10.
  const double asym =
      std::exp(10.0) / std::sqrt(20.0 * M_PI) *
      (1.0 + 1.0 / 80.0 + 9.0 / (2.0 * 80.0 * 80.0) +
       225.0 / (6.0 * 80.0 * 80.0 * 80.0));
  REQUIRE(ortho::bessel_i0(10.0) ==
          Approx(static_cast<double>(i0_reference(10.0L))).epsilon(1e-12));
  REQUIRE(ortho::bessel_i0(10.0) == Approx(asym).epsilon(1e-5));

  REQUIRE_THROWS_AS(ortho::bessel_i0(std::nan("")), std::domain_error);
  REQUIRE_THROWS_AS(ortho::bessel_i0(-1.0), std::domain_error);
}

TEST_CASE("modified Bessel I1 against the series oracle") {
  REQUIRE(ortho::bessel_i1(0.0) == 0.0);
  const double ref1 = static_cast<double>(i1_reference(1.0L));
  REQUIRE(std::abs(ref1 - 0.565159103992485) < 5e-15);
  REQUIRE(ortho::bessel_i1(1.0) == Approx(ref1).epsilon(1e-12));
  // leading series term x/2
  REQUIRE(std::abs(ortho::bessel_i1(1e-8) - 5e-9) <= 1e-20);
  REQUIRE_THROWS_AS(ortho::bessel_i1(std::nan("")), std::domain_error);
}

TEST_CASE("crossover between series and asymptotic expansion") {
  for (double x : {15.0, 15.0001, 15.5, 16.0, 18.0}) {
    const double series = std::exp(-x) * ortho::bessel_detail::i0_series(x);
    const double asym = ortho::bessel_detail::iv_asym_scaled(0, x);
    REQUIRE(series == Approx(asym).epsilon(1e-12));
    const double series1 =
        std::exp(-x) * x * ortho::bessel_detail::i1_over_x_series(x);
    const double asym1 = ortho::bessel_detail::iv_asym_scaled(1, x);
    REQUIRE(series1 == Approx(asym1).epsilon(1e-12));
  }
}

TEST_CASE("ordering and derivative identities") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
    REQUIRE(ortho::bessel_i0(x) >= 1.0);
    REQUIRE(ortho::bessel_i1(x) >= 0.0);
    REQUIRE(ortho::bessel_i0(x) >= ortho::bessel_i1(x));
    // I0'(x) = I1(x) by central difference
    const double h = 1e-6;
    const double fd = (ortho::bessel_i0(x + h) - ortho::bessel_i0(x - h)) /
                      (2.0 * h);
    REQUIRE(fd == Approx(ortho::bessel_i1(x)).epsilon(1e-6));
  }
}

TEST_CASE("scaled variants stay bounded at hydrodynamic magnitudes") {
  const double x = 1e4;
  const double i0s = ortho::bessel_i0_scaled(x);
  const double i1s = ortho::bessel_i1_scaled(x);
  REQUIRE(std::isfinite(i0s));
  REQUIRE(std::isfinite(i1s));
  const double head = 1.0 / std::sqrt(2.0 * M_PI * x);
  REQUIRE(i0s == Approx(head * (1.0 + 1.0 / (8.0 * x))).epsilon(1e-6));
  REQUIRE(i0s > i1s);
  // small-x limit of e^{-x} I1(x)/x
  REQUIRE(ortho::bessel_i1_scaled_over_x(0.0) == 0.5);
}

TEST_CASE("time-derivative kernel") {
  SECTION("w = 0 collapses to a c I1(a c t)") {
    const double a = 1.7, c = 2.0, t = 0.8;
    const double v = ortho::kernel_dt_i0({a, c, t, 0.0});
    REQUIRE(v == Approx(a * c * ortho::bessel_i1(a * c * t)).epsilon(1e-13));
  }
  SECTION("removable singularity at |w| = c t") {
    const double a = 2.0, c = 1.5, t = 1.2;
    const double v = ortho::kernel_dt_i0({a, c, t, c * t});
    REQUIRE(v == Approx(a * a * c * c * t / 2.0).epsilon(1e-13));
    const double vm = ortho::kernel_dt_i0({a, c, t, -c * t});
    REQUIRE(vm == v);
  }
  SECTION("matches the finite-difference time derivative") {
    const double a = 2.0, c = 1.0, t = 1.0, w = 0.6;
    auto f = [&](double tt) {
      return ortho::bessel_i0(a * std::sqrt(c * c * tt * tt - w * w));
    };
    const double h = 1e-6;
    const double fd = (f(t + h) - f(t - h)) / (2.0 * h);
    REQUIRE(ortho::kernel_dt_i0({a, c, t, w}) == Approx(fd).epsilon(1e-6));
  }
  SECTION("random valid arguments agree with finite differences") {
    const double params[][4] = {{0.5, 1.0, 2.0, 1.3},
                                {3.0, 0.5, 1.0, -0.2},
                                {1.0, 2.0, 0.7, 1.1},
                                {4.0, 1.0, 1.5, 0.0}};
    for (const auto& q : params) {
      const double a = q[0], c = q[1], t = q[2], w = q[3];
      auto f = [&](double tt) {
        return ortho::bessel_i0(a * std::sqrt(c * c * tt * tt - w * w));
      };
      const double h = 1e-6;
      const double fd = (f(t + h) - f(t - h)) / (2.0 * h);
      REQUIRE(ortho::kernel_dt_i0({a, c, t, w}) == Approx(fd).epsilon(1e-6));
    }
  }
  SECTION("domain validation") {
    REQUIRE_THROWS_AS(ortho::kernel_dt_i0({1.0, 1.0, 1.0, 1.5}),
                      std::domain_error);
    REQUIRE_THROWS_AS(ortho::kernel_dt_i0({1.0, -1.0, 1.0, 0.0}),
                      std::domain_error);
  }
}

TEST_CASE("scaled law kernel equals the unscaled bracket") {
  const double mu = 1.3, c = 1.0, t = 1.0;
  const ortho::KernelArgs k{mu / c, c, t, 0.4};
  const double scaled = ortho::scaled_law_kernel(mu, k, mu * t);
  const double z = (mu / c) * std::sqrt(c * c * t * t - 0.4 * 0.4);
  const double plain =
      std::exp(-mu * t) * (mu * ortho::bessel_i0(z) + ortho::kernel_dt_i0(k));
  REQUIRE(scaled == Approx(plain).epsilon(1e-13));
  // no overflow at lambda t = 1e4
  const double big_mu = 1e4;
  const ortho::KernelArgs kb{big_mu, 1.0, 1.0, 0.3};
  const double v = ortho::scaled_law_kernel(big_mu, kb, big_mu);
  REQUIRE(std::isfinite(v));
  REQUIRE(v >= 0.0);
}
