#ifndef ORTHO_EXACT_HPP
#define ORTHO_EXACT_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ortho/bessel.hpp"
#include "ortho/motion.hpp"
#include "ortho/telegraph.hpp"

namespace ortho {

/// The two square roots of the interior characteristic function,
/// A = (1/2) sqrt(4 lambda^2 p^2 - c^2 (alpha-beta)^2) and
/// B = (1/2) sqrt(4 lambda^2 (1-p)^2 - c^2 (alpha+beta)^2),
/// principal branch (nonnegative real or nonnegative imaginary part).
struct ABPair {
  std::complex<double> A;
  std::complex<double> B;
};

inline ABPair ab_pair(const ModelParams& m, double alpha, double beta) {
  validate(m);
  const double da = m.lambda * m.p * m.lambda * m.p -
                    0.25 * m.c * m.c * (alpha - beta) * (alpha - beta);
  const double db = m.lambda * (1.0 - m.p) * m.lambda * (1.0 - m.p) -
                    0.25 * m.c * m.c * (alpha + beta) * (alpha + beta);
  return {std::sqrt(std::complex<double>(da, 0.0)),
          std::sqrt(std::complex<double>(db, 0.0))};
}

namespace exact_detail {

// e^{-mu t} [cosh(S t) + mu t sinhc(S t)] with S = sqrt(disc), i.e. one
// bracket of the interior characteristic function times its e^{-mu t} share
// of the overall damping. Real for every real disc.
inline std::complex<double> cf_half_factor(double mu, double disc, double t) {
  const double w = disc * t * t;  // (St)^2
  if (std::abs(w) < 2.5e-3) {
    const double ch = 1.0 + w / 2.0 + w * w / 24.0 + w * w * w / 720.0;
    const double shc =
        t * (1.0 + w / 6.0 + w * w / 120.0 + w * w * w / 5040.0);
    return std::exp(-mu * t) * (ch + mu * shc);
  }
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    // Re exponents are <= 0 because s <= mu whenever disc = mu^2 - (...)^2.
    const double ep = std::exp((s - mu) * t);
    const double em = std::exp(-(s + mu) * t);
    return 0.5 * ((1.0 + mu / s) * ep + (1.0 - mu / s) * em);
  }
  const double s = std::sqrt(-disc);
  return std::exp(-mu * t) * (std::cos(s * t) + mu * std::sin(s * t) / s);
}

}  // namespace exact_detail

/// Joint characteristic function E[e^{i alpha X + i beta Y}]: the product of
/// the A-bracket (weight lambda p) and the B-bracket (weight lambda (1-p))
/// times e^{-lambda t}/4, arranged so nothing overflows for large lambda t.
inline std::complex<double> joint_cf(const ModelParams& m, double alpha,
                                     double beta, double t) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("joint_cf: t must be > 0");
  const double lp = m.lambda * m.p;
  const double lq = m.lambda * (1.0 - m.p);
  const double da = lp * lp - 0.25 * m.c * m.c * (alpha - beta) * (alpha - beta);
  const double db = lq * lq - 0.25 * m.c * m.c * (alpha + beta) * (alpha + beta);
  return exact_detail::cf_half_factor(lp, da, t) *
         exact_detail::cf_half_factor(lq, db, t);
}

/// Interior density on |x| + |y| < c t, the product of the two Bessel
/// brackets over the rotated coordinates xi = x+y and eta = x-y.
inline double interior_density(const ModelParams& m, double x, double y,
                               double t) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("interior_density: t must be > 0");
  const double ct = m.c * t;
  const double xi = x + y;
  const double eta = x - y;
  if (!(std::abs(xi) < ct && std::abs(eta) < ct)) {
    throw std::domain_error("interior_density: point outside the open support");
  }
  const double mu_u = m.lambda * (1.0 - m.p);
  const double mu_v = m.lambda * m.p;
  const double fu =
      scaled_law_kernel(mu_u, KernelArgs{mu_u / m.c, m.c, t, xi}, mu_u * t);
  const double fv =
      scaled_law_kernel(mu_v, KernelArgs{mu_v / m.c, m.c, t, eta}, mu_v * t);
  return fu * fv / (2.0 * m.c * m.c);
}

/// Probability of the whole boundary, e^{-lt(1-p)} + e^{-ltp} - e^{-lt}.
inline double boundary_mass_total(const ModelParams& m, double t) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("boundary_mass_total: t must be > 0");
  return std::exp(-m.lambda * t * (1.0 - m.p)) +
         std::exp(-m.lambda * t * m.p) - std::exp(-m.lambda * t);
}

/// Mass of one closed side (vertices included): diagonal sides 0 and 2 carry
/// (1/2)e^{-lambda t(1-p)}, anti-diagonal sides 1 and 3 carry
/// (1/2)e^{-lambda t p}.
inline double boundary_side_mass(const ModelParams& m, double t, int side) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("boundary_side_mass: t must be > 0");
  if (side < 0 || side > 3) {
    throw std::domain_error("boundary_side_mass: side must be in 0..3");
  }
  const double rate = (side % 2 == 0) ? m.lambda * (1.0 - m.p) : m.lambda * m.p;
  return 0.5 * std::exp(-rate * t);
}

/// Mass of each vertex, e^{-lambda t}/4.
inline double vertex_mass(const ModelParams& m, double t) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("vertex_mass: t must be > 0");
  return 0.25 * std::exp(-m.lambda * t);
}

/// Density along a side for |eta| < ct, eta being the free coordinate of the
/// side. Sides 0 and 2 use Bessel scale lambda p; on sides 1 and 3 the two
/// contiguous directions swap roles, so p and 1-p trade places.
inline double boundary_density(const ModelParams& m, double eta, double t,
                               int side) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("boundary_density: t must be > 0");
  if (side < 0 || side > 3) {
    throw std::domain_error("boundary_density: side must be in 0..3");
  }
  if (!(std::abs(eta) < m.c * t)) {
    throw std::domain_error("boundary_density: |eta| >= c t");
  }
  const double scale = (side % 2 == 0) ? m.lambda * m.p : m.lambda * (1.0 - m.p);
  const KernelArgs k{scale / m.c, m.c, t, eta};
  return scaled_law_kernel(scale, k, m.lambda * t) / (4.0 * m.c);
}

/// Characteristic function of the law on the top-right side (vertex atoms
/// included), E[e^{i alpha (X-Y)}; X+Y = ct].
inline std::complex<double> boundary_cf(const ModelParams& m, double alpha,
                                        double t) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("boundary_cf: t must be > 0");
  const double lp = m.lambda * m.p;
  const double lq = m.lambda * (1.0 - m.p);
  const double disc = lp * lp - alpha * alpha * m.c * m.c;
  // (e^{-lambda t}/2) [cosh(St) + lambda p t sinhc(St)]
  return 0.5 * std::exp(-lq * t) * exact_detail::cf_half_factor(lp, disc, t);
}

enum class OccupationVariant { paper, symmetrized };

/// Law of the vertical occupation time T(t): atoms e^{-lambda t}/2 at 0 and
/// t, and a Bessel density inside (0,t). The paper's printed density carries
/// the factor s in its second term; the symmetrized variant replaces it by
/// t/2. Both integrate to 1 - e^{-lambda t}; the verify module adjudicates
/// which one matches the simulated process.
class OccupationLaw {
 public:
  OccupationLaw(double lambda, double t, OccupationVariant variant)
      : lambda_(lambda), t_(t), variant_(variant) {
    if (!(lambda > 0.0) || !std::isfinite(lambda) || !(t > 0.0) ||
        !std::isfinite(t)) {
      throw std::domain_error("OccupationLaw: need lambda > 0, t > 0");
    }
  }

  double atom_at_zero() const { return 0.5 * std::exp(-lambda_ * t_); }
  double atom_at_t() const { return 0.5 * std::exp(-lambda_ * t_); }
  double lambda() const { return lambda_; }
  double horizon() const { return t_; }
  OccupationVariant variant() const { return variant_; }

  double density(double s) const {
    if (!(s > 0.0 && s < t_)) {
      throw std::domain_error("OccupationLaw::density: s outside (0,t)");
    }
    const double z = 2.0 * lambda_ * std::sqrt(s * (t_ - s));
    const double damp = std::exp(z - lambda_ * t_);
    const double second =
        (variant_ == OccupationVariant::paper) ? 2.0 * lambda_ * s
                                               : lambda_ * t_;
    return damp * lambda_ *
           (bessel_i0_scaled(z) + second * bessel_i1_scaled_over_x(z));
  }

 private:
  double lambda_;
  double t_;
  OccupationVariant variant_;
};

inline OccupationLaw occupation_law(double lambda, double t,
                                    OccupationVariant variant) {
  return OccupationLaw(lambda, t, variant);
}

/// Characteristic function of T(t),
/// e^{i alpha t/2} e^{-lambda t} [cosh(Rt/2) + 2 lambda sinh(Rt/2)/R],
/// R = sqrt(4 lambda^2 - alpha^2) on the principal branch.
inline std::complex<double> occupation_cf(double lambda, double alpha,
                                          double t) {
  if (!(lambda > 0.0) || !(t > 0.0)) {
    throw std::domain_error("occupation_cf: need lambda > 0, t > 0");
  }
  const double disc = lambda * lambda - 0.25 * alpha * alpha;  // (R/2)^2
  const std::complex<double> phase(std::cos(0.5 * alpha * t),
                                   std::sin(0.5 * alpha * t));
  return phase * exact_detail::cf_half_factor(lambda, disc, t);
}

/// Parameters of the hydrodynamic Gaussian limit: covariance
/// t/(4p(1-p)) [[1, 2p-1], [2p-1, 1]] and correlation 2p-1.
struct GaussianLimit {
  double cov_xx;
  double cov_xy;
  double cov_yy;
  double correlation;
};

inline GaussianLimit hydro_params(double p, double t) {
  if (!(p > 0.0 && p < 1.0) || !(t > 0.0)) {
    throw std::domain_error("hydro_params: need 0 < p < 1, t > 0");
  }
  const double v = t / (4.0 * p * (1.0 - p));
  const double rho = 2.0 * p - 1.0;
  return {v, v * rho, v, rho};
}

/// Hydrodynamic limit density,
/// sqrt(p(1-p))/(pi t) exp(-(x^2+y^2+2xy(1-2p))/(2t)).
inline double hydro_density(double p, double x, double y, double t) {
  if (!(p > 0.0 && p < 1.0) || !(t > 0.0)) {
    throw std::domain_error("hydro_density: need 0 < p < 1, t > 0");
  }
  const double q = (x * x + y * y + 2.0 * x * y * (1.0 - 2.0 * p)) / (2.0 * t);
  return std::sqrt(p * (1.0 - p)) / (M_PI * t) * std::exp(-q);
}

}  // namespace ortho

#endif  // ORTHO_EXACT_HPP
