#ifndef ORTHO_BESSEL_HPP
#define ORTHO_BESSEL_HPP

#include <cmath>
#include <stdexcept>

namespace ortho {

/// Arguments of the kernel d/dt I0(a*sqrt(c^2 t^2 - w^2)) shared by every
/// closed-form density of the planar motion. Requires c>0, t>0, a>=0 and
/// |w| <= c*t.
struct KernelArgs {
  double a;
  double c;
  double t;
  double w;
};

inline void validate(const KernelArgs& k) {
  if (!(k.c > 0.0) || !(k.t > 0.0) || !(k.a >= 0.0) || !std::isfinite(k.a) ||
      !std::isfinite(k.c) || !std::isfinite(k.t) || !std::isfinite(k.w)) {
    throw std::domain_error("KernelArgs: need finite a>=0, c>0, t>0");
  }
  if (std::abs(k.w) > k.c * k.t) {
    throw std::domain_error("KernelArgs: |w| > c*t");
  }
}

namespace bessel_detail {

inline void require_finite_nonneg(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("bessel: argument must be finite and nonnegative");
  }
}

// Ascending series; all terms positive, safe up to the crossover point.
inline double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

// I1(x)/x as a series; value 1/2 at x = 0.
inline double i1_over_x_series(double x) {
  const double q = 0.25 * x * x;
  double term = 0.5;
  double sum = 0.5;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

// Tail sum of the large-argument expansion of e^{-x} I_nu(x), nu in {0,1}.
// Truncated at the smallest term; below the crossover the smallest term is
// already under 1e-13 relative.
inline double iv_asym_scaled(int nu, double x) {
  const double four_nu2 = 4.0 * static_cast<double>(nu * nu);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double odd = 2.0 * k + 1.0;
    const double next = term * (odd * odd - four_nu2) / (8.0 * (k + 1) * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

// Series below, asymptotic expansion above; the overlap of the two methods
// agrees to better than 1e-12 around this point.
constexpr double kSeriesCut = 15.0;

}  // namespace bessel_detail

/// e^{-x} I0(x); never overflows.
inline double bessel_i0_scaled(double x) {
  bessel_detail::require_finite_nonneg(x);
  if (x <= bessel_detail::kSeriesCut) {
    return std::exp(-x) * bessel_detail::i0_series(x);
  }
  return bessel_detail::iv_asym_scaled(0, x);
}

/// e^{-x} I1(x); never overflows.
inline double bessel_i1_scaled(double x) {
  bessel_detail::require_finite_nonneg(x);
  if (x <= bessel_detail::kSeriesCut) {
    return std::exp(-x) * x * bessel_detail::i1_over_x_series(x);
  }
  return bessel_detail::iv_asym_scaled(1, x);
}

/// e^{-x} I1(x) / x with the x -> 0 limit 1/2 built in.
inline double bessel_i1_scaled_over_x(double x) {
  bessel_detail::require_finite_nonneg(x);
  if (x <= bessel_detail::kSeriesCut) {
    return std::exp(-x) * bessel_detail::i1_over_x_series(x);
  }
  return bessel_detail::iv_asym_scaled(1, x) / x;
}

inline double bessel_i0(double x) {
  bessel_detail::require_finite_nonneg(x);
  if (x <= bessel_detail::kSeriesCut) return bessel_detail::i0_series(x);
  return std::exp(x) * bessel_detail::iv_asym_scaled(0, x);
}

inline double bessel_i1(double x) {
  bessel_detail::require_finite_nonneg(x);
  if (x <= bessel_detail::kSeriesCut) {
    return x * bessel_detail::i1_over_x_series(x);
  }
  return std::exp(x) * bessel_detail::iv_asym_scaled(1, x);
}

/// d/dt I0(a*sqrt(c^2 t^2 - w^2)) = a c^2 t I1(z)/sqrt(c^2 t^2 - w^2) with
/// z = a*sqrt(c^2 t^2 - w^2). At |w| = c t the removable singularity is
/// replaced by its limit a^2 c^2 t / 2.
inline double kernel_dt_i0(const KernelArgs& k) {
  validate(k);
  const double s2 = (k.c * k.t - k.w) * (k.c * k.t + k.w);
  const double s = std::sqrt(std::max(s2, 0.0));
  const double z = k.a * s;
  if (z <= bessel_detail::kSeriesCut) {
    return k.a * k.a * k.c * k.c * k.t * bessel_detail::i1_over_x_series(z);
  }
  return k.a * k.c * k.c * k.t * bessel_i1(z) / s;
}

/// e^{-decay} * [mu I0(z) + d/dt I0(z)] with z = a*sqrt(c^2 t^2 - w^2),
/// evaluated through the scaled Bessel functions so that nothing overflows.
/// Requires z <= decay, which holds for every law in this library because
/// z <= a c t and decay is the matching rate*t.
inline double scaled_law_kernel(double mu, const KernelArgs& k, double decay) {
  validate(k);
  if (!(decay >= 0.0) || !std::isfinite(decay)) {
    throw std::domain_error("scaled_law_kernel: decay must be finite and >= 0");
  }
  const double s2 = (k.c * k.t - k.w) * (k.c * k.t + k.w);
  const double s = std::sqrt(std::max(s2, 0.0));
  const double z = k.a * s;
  const double damp = std::exp(z - decay);
  return damp * (mu * bessel_i0_scaled(z) +
                 k.a * k.a * k.c * k.c * k.t * bessel_i1_scaled_over_x(z));
}

}  // namespace ortho

#endif  // ORTHO_BESSEL_HPP
