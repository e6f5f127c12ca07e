#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <vector>

#include "ortho/exact.hpp"
#include "ortho/motion.hpp"
#include "ortho/stats.hpp"

using Catch::Approx;
using ortho::Direction;
using ortho::ModelParams;
using ortho::PathSample;

namespace {

double poisson_pmf(int k, double mean) {
  return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

}  // namespace

TEST_CASE("switching rule") {
  // horizontal: counterclockwise with probability p
  REQUIRE(ortho::next_direction({0}, 0.3, 0.9) == Direction{1});
  REQUIRE(ortho::next_direction({0}, 0.95, 0.9) == Direction{3});
  // vertical: clockwise with probability p
  REQUIRE(ortho::next_direction({1}, 0.3, 0.9) == Direction{0});
  REQUIRE(ortho::next_direction({1}, 0.95, 0.9) == Direction{2});
  REQUIRE(ortho::next_direction({2}, 0.95, 0.9) == Direction{1});
  REQUIRE(ortho::next_direction({3}, 0.05, 0.7) == Direction{2});
  // never a reversal, always a quarter turn
  for (int j = 0; j < 4; ++j) {
    for (double u : {0.0, 0.5, 0.99}) {
      const int nj = ortho::next_direction({j}, u, 0.6).j;
      REQUIRE(((nj - j + 4) % 4 == 1 || (nj - j + 4) % 4 == 3));
    }
  }
}

TEST_CASE("path sampler") {
  const ModelParams m{1.0, 0.5, 1.0};
  SECTION("determinism") {
    ortho::RngStream a(5, 11), b(5, 11);
    const auto pa = ortho::sample_path(m, 1.0, a);
    const auto pb = ortho::sample_path(m, 1.0, b);
    REQUIRE(pa.initial_direction == pb.initial_direction);
    REQUIRE(pa.switch_times == pb.switch_times);
  }
  SECTION("paths are valid: increasing times, quarter turns only") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      ortho::RngStream rng(77, i);
      const auto path = ortho::sample_path(m, 2.0, rng);
      Direction prev = path.initial_direction;
      double tprev = 0.0;
      for (std::size_t k = 0; k < path.switch_times.size(); ++k) {
        REQUIRE(path.switch_times[k] > tprev);
        REQUIRE(path.switch_times[k] < 2.0);
        const int dd = (path.directions_after[k].j - prev.j + 4) % 4;
        REQUIRE((dd == 1 || dd == 3));
        tprev = path.switch_times[k];
        prev = path.directions_after[k];
      }
    }
  }
  SECTION("switch counts follow Poisson(lambda t)") {
    const std::size_t n = 1000000;
    std::array<std::int64_t, 16> counts{};
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(4242, i);
      const auto path = ortho::sample_path(m, 1.0, rng);
      const std::size_t k = std::min<std::size_t>(path.switch_times.size(), 15);
      ++counts[k];
    }
    std::vector<double> expected(16);
    double head = 0.0;
    for (int k = 0; k < 15; ++k) {
      expected[k] = n * poisson_pmf(k, 1.0);
      head += expected[k];
    }
    expected[15] = n - head;  // pooled tail
    const auto res = ortho::chi_square_test(counts, expected, 0.01);
    INFO("chi2 = " << res.statistic << " crit = " << res.critical);
    REQUIRE(res.passed);
  }
}

TEST_CASE("position reconstruction") {
  const ModelParams m{1.0, 0.5, 2.0};
  SECTION("starts at the origin") {
    ortho::RngStream rng(1, 0);
    const auto path = ortho::sample_path(m, 1.0, rng);
    const auto p0 = ortho::position_at(path, m, 0.0);
    REQUIRE(p0.x == 0.0);
    REQUIRE(p0.y == 0.0);
  }
  SECTION("no switches, start d1, ends at (0, ct)") {
    PathSample path;
    path.horizon = 1.5;
    path.initial_direction = {1};
    const auto p = ortho::position_at(path, m, 1.5);
    REQUIRE(p.x == 0.0);
    REQUIRE(p.y == Approx(m.c * 1.5).epsilon(1e-15));
  }
  SECTION("alternating d0/d1 keeps x+y = c tau") {
    PathSample path;
    path.horizon = 1.0;
    path.initial_direction = {0};
    path.switch_times = {0.2, 0.35, 0.6, 0.9};
    path.directions_after = {{1}, {0}, {1}, {0}};
    for (double tau : {0.1, 0.3, 0.5, 0.8, 1.0}) {
      const auto p = ortho::position_at(path, m, tau);
      REQUIRE(p.x + p.y == Approx(m.c * tau).epsilon(1e-12));
    }
    REQUIRE(ortho::classify_boundary(path) ==
            ortho::BoundaryClass{ortho::BoundaryClass::side, 0});
  }
  SECTION("tau outside the horizon is a domain error") {
    PathSample path;
    path.horizon = 1.0;
    REQUIRE_THROWS_AS(ortho::position_at(path, m, 1.5), std::domain_error);
    REQUIRE_THROWS_AS(ortho::position_at(path, m, -0.1), std::domain_error);
  }
}

TEST_CASE("boundary classification") {
  SECTION("empty path is a vertex") {
    PathSample path;
    path.horizon = 1.0;
    path.initial_direction = {2};
    REQUIRE(ortho::classify_boundary(path) ==
            ortho::BoundaryClass{ortho::BoundaryClass::vertex, 2});
  }
  SECTION("three directions used means interior") {
    PathSample path;
    path.horizon = 1.0;
    path.initial_direction = {0};
    path.switch_times = {0.2, 0.5};
    path.directions_after = {{1}, {2}};
    REQUIRE(ortho::classify_boundary(path).kind ==
            ortho::BoundaryClass::interior);
  }
  SECTION("side classification agrees with the support geometry") {
    const ModelParams m{1.0, 0.5, 1.0};
    const double t = 1.0;
    int sides_seen = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
      ortho::RngStream rng(991, i);
      const auto path = ortho::sample_path(m, t, rng);
      const auto cls = ortho::classify_boundary(path);
      const auto p = ortho::position_at(path, m, t);
      const double xi = p.x + p.y, eta = p.x - p.y;
      REQUIRE(std::abs(xi) <= m.c * t + 1e-12);
      REQUIRE(std::abs(eta) <= m.c * t + 1e-12);
      const bool on_side0 = std::abs(xi - m.c * t) <= 1e-12 &&
                            std::abs(std::abs(eta) - m.c * t) > 1e-9;
      const bool is_side0 = cls == ortho::BoundaryClass{ortho::BoundaryClass::side, 0};
      REQUIRE(on_side0 == is_side0);
      if (cls.kind == ortho::BoundaryClass::side) ++sides_seen;
    }
    REQUIRE(sides_seen > 0);
  }
}

TEST_CASE("planar samplers") {
  const ModelParams m{1.0, 0.3, 1.0};
  const double t = 1.0;
  SECTION("direct sampler determinism and support membership") {
    ortho::RngStream a(8, 2), b(8, 2);
    const auto pa = ortho::sample_planar_direct(m, t, a);
    const auto pb = ortho::sample_planar_direct(m, t, b);
    REQUIRE(pa.x == pb.x);
    REQUIRE(pa.y == pb.y);
  }
  SECTION("decomposed sampler reproduces its two telegraph draws") {
    const ortho::TelegraphParams pu{m.lambda * (1.0 - m.p), 0.5 * m.c};
    const ortho::TelegraphParams pv{m.lambda * m.p, 0.5 * m.c};
    ortho::RngStream predict(6, 9);
    const auto u = ortho::sample_telegraph(pu, t, predict);
    const auto v = ortho::sample_telegraph(pv, t, predict);
    ortho::RngStream run(6, 9);
    const auto p = ortho::sample_planar_decomposed(m, t, run);
    REQUIRE(p.x == u.position + v.position);
    REQUIRE(p.y == u.position - v.position);
  }
  SECTION("two telegraph atoms land on a vertex of the square") {
    int hits = 0;
    for (std::uint64_t i = 0; i < 3000; ++i) {
      ortho::RngStream rng(3, i);
      const auto p = ortho::sample_planar_decomposed(m, t, rng);
      REQUIRE(std::abs(p.x + p.y) <= m.c * t + 1e-12);
      REQUIRE(std::abs(p.x - p.y) <= m.c * t + 1e-12);
      if (std::abs(p.x + p.y) == m.c * t && std::abs(p.x - p.y) == m.c * t) {
        // both components pinned: one of the four vertices
        REQUIRE((std::abs(p.x) == m.c * t || std::abs(p.y) == m.c * t));
        ++hits;
      }
    }
    REQUIRE(hits > 0);
  }
  SECTION("mean and variance of the direct sampler") {
    const std::size_t n = 1000000;
    double sx = 0.0, sy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(10203, i);
      const auto p = ortho::sample_planar_direct(m, t, rng);
      sx += p.x;
      sy += p.y;
      sxx += p.x * p.x;
    }
    const double mx = sx / n, my = sy / n;
    const double var_x = sxx / n - mx * mx;
    const double var_expected =
        ortho::telegraph_variance({m.lambda * (1.0 - m.p), 0.5 * m.c}, t) +
        ortho::telegraph_variance({m.lambda * m.p, 0.5 * m.c}, t);
    const double se_mean = std::sqrt(var_x / n);
    REQUIRE(std::abs(mx) <= 4.0 * se_mean);
    REQUIRE(std::abs(my) <= 4.0 * se_mean * 1.2);
    // generous CLT band for the variance estimate
    REQUIRE(std::abs(var_x - var_expected) <=
            4.0 * var_expected * std::sqrt(3.0 / n));
  }
}

TEST_CASE("occupation time of vertical directions") {
  SECTION("constructed paths") {
    PathSample path;
    path.horizon = 2.0;
    path.initial_direction = {0};
    REQUIRE(ortho::occupation_vertical(path) == 0.0);
    path.initial_direction = {3};
    REQUIRE(ortho::occupation_vertical(path) == 2.0);
    path.initial_direction = {0};
    path.switch_times = {0.5, 1.25};
    path.directions_after = {{1}, {2}};
    REQUIRE(ortho::occupation_vertical(path) == Approx(0.75).epsilon(1e-15));
  }
  SECTION("atom at zero has mass e^{-lambda t}/2") {
    const ModelParams m{1.0, 0.5, 1.0};
    const double t = 1.0;
    const std::size_t n = 1000000;
    std::int64_t zero = 0, full = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(55501, i);
      const auto path = ortho::sample_path(m, t, rng);
      const double T = ortho::occupation_vertical(path);
      REQUIRE(T >= 0.0);
      REQUIRE(T <= t);
      if (T == 0.0) ++zero;
      if (T == t) ++full;
    }
    const double expected = 0.5 * std::exp(-m.lambda * t);
    const double se = std::sqrt(expected * (1.0 - expected) / n);
    REQUIRE(std::abs(static_cast<double>(zero) / n - expected) <= 4.0 * se);
    REQUIRE(std::abs(static_cast<double>(full) / n - expected) <= 4.0 * se);
  }
  SECTION("T and t-T are exchangeable across the ensemble") {
    const ModelParams m{1.3, 0.7, 1.0};
    const double t = 1.0;
    const std::size_t n = 1000000;
    std::vector<double> T(n), R(n);
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(60607, i);
      T[i] = ortho::occupation_vertical(ortho::sample_path(m, t, rng));
      R[i] = t - T[i];
    }
    const double d = ortho::ks_two_sample(T, R);
    REQUIRE(ortho::ks_two_sample_pvalue(d, n, n) > 0.001);
  }
}

TEST_CASE("boundary statistics against the closed forms") {
  const ModelParams m{1.0, 0.5, 1.0};
  const double t = 1.0;
  const std::size_t n = 1000000;
  SECTION("total boundary mass") {
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(70809, i);
      const auto path = ortho::sample_path(m, t, rng);
      if (ortho::classify_boundary(path).kind !=
          ortho::BoundaryClass::interior) {
        ++boundary;
      }
    }
    const double expected = ortho::boundary_mass_total(m, t);
    REQUIRE(expected == Approx(0.8451818782538245).epsilon(1e-12));
    const double se = std::sqrt(expected * (1.0 - expected) / n);
    REQUIRE(std::abs(static_cast<double>(boundary) / n - expected) <=
            4.0 * se);
  }
  SECTION("transition frequencies match the generator pattern") {
    const ModelParams mg{1.0, 0.3, 1.0};
    std::array<std::array<std::int64_t, 4>, 4> tr{};
    for (std::size_t i = 0; i < n; ++i) {
      ortho::RngStream rng(90102, i);
      const auto path = ortho::sample_path(mg, t, rng);
      Direction prev = path.initial_direction;
      for (const auto& d : path.directions_after) {
        ++tr[prev.j][d.j];
        prev = d;
      }
    }
    for (int j = 0; j < 4; ++j) {
      const std::int64_t total = tr[j][0] + tr[j][1] + tr[j][2] + tr[j][3];
      REQUIRE(total > 1000);
      // reversals never occur
      REQUIRE(tr[j][(j + 2) % 4] == 0);
      const double ccw =
          static_cast<double>(tr[j][(j + 1) % 4]) / static_cast<double>(total);
      const double p_ccw = (j % 2 == 0) ? mg.p : 1.0 - mg.p;
      const double se =
          std::sqrt(p_ccw * (1.0 - p_ccw) / static_cast<double>(total));
      REQUIRE(std::abs(ccw - p_ccw) <= 4.0 * se);
    }
  }
}
