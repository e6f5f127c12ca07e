#ifndef ORTHO_TELEGRAPH_HPP
#define ORTHO_TELEGRAPH_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "ortho/bessel.hpp"
#include "ortho/rng.hpp"

namespace ortho {

/// One-dimensional telegraph process: velocity +-speed, sign flips at
/// Poisson(rate) epochs. rate may be zero only for analytic limit checks.
struct TelegraphParams {
  double rate;
  double speed;
};

inline void validate(const TelegraphParams& p) {
  if (!(p.rate >= 0.0) || !std::isfinite(p.rate) || !(p.speed > 0.0) ||
      !std::isfinite(p.speed)) {
    throw std::domain_error("TelegraphParams: need rate >= 0, speed > 0");
  }
}

struct TelegraphSample {
  double position;
  int final_velocity_sign;  // +-1
  std::uint64_t switch_count;
};

/// Mass sitting at each of +-speed*t (no switch up to t, initial sign fixed).
inline double telegraph_atom(const TelegraphParams& p, double t) {
  validate(p);
  if (!(t > 0.0)) throw std::domain_error("telegraph_atom: t must be > 0");
  return 0.5 * std::exp(-p.rate * t);
}

/// Absolutely continuous part of the law on |x| < speed*t.
inline double telegraph_density(const TelegraphParams& p, double x, double t) {
  validate(p);
  if (!(t > 0.0)) throw std::domain_error("telegraph_density: t must be > 0");
  const double vt = p.speed * t;
  if (!(std::abs(x) < vt)) {
    throw std::domain_error(
        "telegraph_density: |x| >= speed*t (atoms are a separate operation)");
  }
  const KernelArgs k{p.rate / p.speed, p.speed, t, x};
  return scaled_law_kernel(p.rate, k, p.rate * t) / (2.0 * p.speed);
}

/// Characteristic function e^{-mu t}[cosh(Bt) + mu sinh(Bt)/B] with
/// B = sqrt(mu^2 - v^2 gamma^2) on the principal branch. The law is
/// symmetric, so the imaginary part is analytically zero.
inline std::complex<double> telegraph_cf(const TelegraphParams& p,
                                         double gamma, double t) {
  validate(p);
  if (!(t > 0.0)) throw std::domain_error("telegraph_cf: t must be > 0");
  const double mu = p.rate;
  const double disc = mu * mu - p.speed * p.speed * gamma * gamma;
  const double w = disc * t * t;  // (Bt)^2, sign carries the branch
  if (std::abs(w) < 2.5e-3) {
    // |B|t below 0.05: sixth-order expansion of cosh and sinh(Bt)/B,
    // avoiding the cancellation in (1 +- mu/B).
    const double ch = 1.0 + w / 2.0 + w * w / 24.0 + w * w * w / 720.0;
    const double shc =
        t * (1.0 + w / 6.0 + w * w / 120.0 + w * w * w / 5040.0);
    return std::exp(-mu * t) * (ch + mu * shc);
  }
  const std::complex<double> B = std::sqrt(std::complex<double>(disc, 0.0));
  // Re(B) <= mu, so both exponents have nonpositive real part.
  const std::complex<double> ep = std::exp((B - mu) * t);
  const std::complex<double> em = std::exp(-(B + mu) * t);
  return 0.5 * (1.0 + mu / B) * ep + 0.5 * (1.0 - mu / B) * em;
}

/// Event-driven exact sampler; consumes one uniform for the initial sign and
/// one exponential per switch, deterministic given the stream state.
inline TelegraphSample sample_telegraph(const TelegraphParams& p, double t,
                                        RngStream& rng) {
  validate(p);
  if (!(t > 0.0)) throw std::domain_error("sample_telegraph: t must be > 0");
  int sign = rng.next_double() < 0.5 ? 1 : -1;
  double pos = 0.0;
  double now = 0.0;
  std::uint64_t switches = 0;
  for (;;) {
    const double wait = rng.next_exponential(p.rate);
    if (!(now + wait < t)) {
      pos += sign * p.speed * (t - now);
      break;
    }
    now += wait;
    pos += sign * p.speed * wait;
    sign = -sign;
    ++switches;
  }
  return {pos, sign, switches};
}

/// Variance of the telegraph position, (v^2/(2 mu^2))(2 mu t - 1 + e^{-2 mu t}).
inline double telegraph_variance(const TelegraphParams& p, double t) {
  validate(p);
  const double mu = p.rate;
  const double v = p.speed;
  if (mu == 0.0) return v * v * t * t;  // deterministic +-vt, mean 0
  const double u = 2.0 * mu * t;
  if (u < 1e-3) {
    // (u - 1 + e^{-u}) = u^2/2 (1 - u/3 + u^2/12 - ...), cancellation-free
    return v * v * t * t * (1.0 - u / 3.0 + u * u / 12.0 - u * u * u / 60.0);
  }
  return v * v / (2.0 * mu * mu) * (u - 1.0 + std::exp(-u));
}

}  // namespace ortho

#endif  // ORTHO_TELEGRAPH_HPP
