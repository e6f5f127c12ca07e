#ifndef ORTHO_STATS_HPP
#define ORTHO_STATS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace ortho {

struct EmpiricalCf {
  std::complex<double> value;
  double std_error;  // conservative bound 1/sqrt(N)
};

/// (1/N) sum exp(i(alpha x_j + beta y_j)) over planar samples.
inline EmpiricalCf empirical_cf(std::span<const double> xs,
                                std::span<const double> ys, double alpha,
                                double beta) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw std::invalid_argument("empirical_cf: empty or mismatched samples");
  }
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double phi = alpha * xs[j] + beta * ys[j];
    re += std::cos(phi);
    im += std::sin(phi);
  }
  const double n = static_cast<double>(xs.size());
  return {{re / n, im / n}, 1.0 / std::sqrt(n)};
}

/// Scalar-sample overload, (1/N) sum exp(i alpha x_j).
inline EmpiricalCf empirical_cf(std::span<const double> xs, double alpha) {
  if (xs.empty()) throw std::invalid_argument("empirical_cf: empty samples");
  double re = 0.0, im = 0.0;
  for (double x : xs) {
    re += std::cos(alpha * x);
    im += std::sin(alpha * x);
  }
  const double n = static_cast<double>(xs.size());
  return {{re / n, im / n}, 1.0 / std::sqrt(n)};
}

/// Sup-norm distance between the empirical CDF of the samples and a
/// reference CDF. The CDF may carry atoms: left limits are probed one ulp
/// below each distinct sample value, so a step CDF compared against samples
/// sitting exactly on its jumps gives distance 0.
template <class Cdf>
double ks_distance(std::vector<double> samples, Cdf&& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double v = samples[i];
    const double below =
        cdf(std::nextafter(v, -std::numeric_limits<double>::infinity()));
    const double at = cdf(v);
    d = std::max(d, std::abs(at - static_cast<double>(j) / n));
    d = std::max(d, std::abs(below - static_cast<double>(i) / n));
    i = j;
  }
  return d;
}

/// Two-sample Kolmogorov-Smirnov distance, ties handled by stepping through
/// the distinct values of the pooled sample.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("ks_two_sample: empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() || ib < b.size()) {
    const double v = (ib == b.size() || (ia < a.size() && a[ia] <= b[ib]))
                         ? a[ia]
                         : b[ib];
    while (ia < a.size() && a[ia] == v) ++ia;
    while (ib < b.size() && b[ib] == v) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na -
                             static_cast<double>(ib) / nb));
  }
  return d;
}

/// Asymptotic Kolmogorov tail probability Q(x) = 2 sum (-1)^{j-1} e^{-2 j^2 x^2}.
inline double kolmogorov_q(double x) {
  if (x <= 0.0) return 1.0;
  double s = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    s += (j % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * s, 0.0, 1.0);
}

/// p-value of the two-sample KS statistic under the asymptotic null.
inline double ks_two_sample_pvalue(double d, std::size_t na, std::size_t nb) {
  const double ne = static_cast<double>(na) * static_cast<double>(nb) /
                    static_cast<double>(na + nb);
  return kolmogorov_q(d * std::sqrt(ne));
}

struct ChiSquareResult {
  double statistic;
  int dof;
  double critical;  // upper quantile at the requested level
  bool passed;
  int bins_used;
};

/// Pearson chi-square of observed counts against expected counts. Bins with
/// expected count below min_expected are dropped (standard validity rule);
/// dof = bins_used - 1.
inline ChiSquareResult chi_square_test(std::span<const std::int64_t> observed,
                                       std::span<const double> expected,
                                       double level = 0.01,
                                       double min_expected = 10.0) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_test: size mismatch");
  }
  double stat = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] < min_expected) continue;
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
    ++used;
  }
  if (used < 2) throw std::invalid_argument("chi_square_test: too few bins");
  const int dof = used - 1;
  const double crit = boost::math::quantile(
      boost::math::chi_squared_distribution<double>(dof), 1.0 - level);
  return {stat, dof, crit, stat <= crit, used};
}

}  // namespace ortho

#endif  // ORTHO_STATS_HPP
