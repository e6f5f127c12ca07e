#ifndef ORTHO_ORACLE_HPP
#define ORTHO_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

namespace ortho {

/// Exact occupation-time density obtained without the closed form: given n
/// switches on [0,t], the n+1 inter-event intervals are exchangeable uniform
/// spacings, so the vertical time is t times a Beta variable whose first
/// parameter counts the vertical intervals - floor((n+1)/2) when the motion
/// starts horizontally, ceil((n+1)/2) when it starts vertically, each start
/// carrying probability 1/2. The Poisson mixture over n is truncated once its
/// missing tail mass drops below eps.
class OccupationOracle {
 public:
  OccupationOracle(double lambda, double t, double eps = 1e-12)
      : lambda_(lambda), t_(t) {
    if (!(lambda > 0.0) || !(t > 0.0) || !(eps > 0.0)) {
      throw std::domain_error("OccupationOracle: need lambda > 0, t > 0, eps > 0");
    }
    const double lt = lambda * t;
    double covered = std::exp(-lt);  // n = 0 (the two atoms)
    for (int n = 1; n < 300000; ++n) {
      Row row;
      row.n = n;
      row.log_pois = n * std::log(lt) - lt - std::lgamma(n + 1.0);
      row.k_h = (n + 1) / 2;
      row.k_v = (n + 2) / 2;
      row.lbeta_h = std::lgamma(n + 1.0) - std::lgamma(row.k_h) -
                    std::lgamma(n + 1.0 - row.k_h);
      row.lbeta_v = std::lgamma(n + 1.0) - std::lgamma(row.k_v) -
                    std::lgamma(n + 1.0 - row.k_v);
      covered += std::exp(row.log_pois);
      if (std::exp(row.log_pois) > 1e-320) rows_.push_back(row);
      if (covered > 1.0 - eps) break;
    }
  }

  double lambda() const { return lambda_; }
  double horizon() const { return t_; }
  double atom() const { return 0.5 * std::exp(-lambda_ * t_); }

  double density(double s) const {
    if (!(s > 0.0 && s < t_)) {
      throw std::domain_error("OccupationOracle::density: s outside (0,t)");
    }
    const double u = s / t_;
    const double lu = std::log(u);
    const double l1u = std::log1p(-u);
    double sum = 0.0;
    for (const Row& r : rows_) {
      const double h = std::exp(r.log_pois + r.lbeta_h + (r.k_h - 1) * lu +
                                (r.n - r.k_h) * l1u);
      const double v = std::exp(r.log_pois + r.lbeta_v + (r.k_v - 1) * lu +
                                (r.n - r.k_v) * l1u);
      sum += 0.5 * (h + v);
    }
    return sum / t_;
  }

  /// CDF of the full mixed law (atoms included).
  double cdf(double s) const {
    if (s < 0.0) return 0.0;
    if (s >= t_) return 1.0;
    double acc = atom();
    const double u = s / t_;
    for (const Row& r : rows_) {
      const double pois = std::exp(r.log_pois);
      if (pois < 1e-18) continue;
      acc += pois * 0.5 *
             (boost::math::ibeta(static_cast<double>(r.k_h),
                                 static_cast<double>(r.n + 1 - r.k_h), u) +
              boost::math::ibeta(static_cast<double>(r.k_v),
                                 static_cast<double>(r.n + 1 - r.k_v), u));
    }
    return acc;
  }

 private:
  struct Row {
    int n;
    int k_h;
    int k_v;
    double log_pois;
    double lbeta_h;
    double lbeta_v;
  };
  double lambda_;
  double t_;
  std::vector<Row> rows_;
};

inline double occupation_density_oracle(double lambda, double s, double t,
                                        double eps = 1e-12) {
  return OccupationOracle(lambda, t, eps).density(s);
}

/// Recovers the continuous occupation density from the characteristic
/// function alone. Because T(t) lives on [0,t] and its law is symmetric about
/// t/2, the periodization over frequency multiples alpha_k = 2 pi k / t is
/// continuous and the Fourier coefficients decay like 1/k^2; the two atoms
/// contribute exactly e^{-lambda t} to every coefficient and are subtracted.
/// The 1/k^2 tail is summed analytically through the Bernoulli closed form
/// sum cos(2 pi k u)/k^2 = pi^2 (u^2 - u + 1/6).
inline std::vector<double> cf_invert_occupation(double lambda, double t,
                                                std::span<const double> s_grid,
                                                int terms = 50000,
                                                double tail_tol = 1e-9) {
  if (!(lambda > 0.0) || !(t > 0.0)) {
    throw std::domain_error("cf_invert_occupation: need lambda > 0, t > 0");
  }
  for (double s : s_grid) {
    if (!(s > 0.0 && s < t)) {
      throw std::domain_error("cf_invert_occupation: grid point outside (0,t)");
    }
  }
  const double elt = std::exp(-lambda * t);
  const double two_pi = 2.0 * M_PI;

  // c_k = (-1)^k rho_k - e^{-lambda t}, rho_k real per the symmetry of T(t)
  std::vector<double> coeff(static_cast<std::size_t>(terms) + 1);
  coeff[0] = 1.0 - elt;
  for (int k = 1; k <= terms; ++k) {
    const double alpha = two_pi * k / t;
    if (alpha <= 2.0 * lambda) {
      const double S = std::sqrt(std::max(lambda * lambda - 0.25 * alpha * alpha, 0.0));
      const double st = S * t;
      double rho;
      if (st < 1e-6) {
        rho = elt * (1.0 + lambda * t);
      } else {
        // e^{-lambda t} cosh(St) and e^{-lambda t} sinh(St), S <= lambda
        const double ep = std::exp((S - lambda) * t);
        const double em = std::exp(-(S + lambda) * t);
        rho = 0.5 * (ep + em) + lambda * 0.5 * (ep - em) / S;
      }
      coeff[k] = ((k % 2 == 0) ? rho : -rho) - elt;
    } else {
      const double r = std::sqrt(alpha * alpha - 4.0 * lambda * lambda);
      const double delta = 2.0 * lambda * lambda * t / (alpha + r);
      const double sd = std::sin(delta);
      const double half = std::sin(0.5 * delta);
      coeff[k] = elt * (-2.0 * half * half - 2.0 * lambda * sd / r);
    }
  }

  // analytic 1/k^2 tail coefficient from the large-frequency expansion
  const double lt = lambda * t;
  const double c_inf = -elt * (lt * lt * lt / 2.0) * (1.0 + lt / 4.0) /
                       (M_PI * M_PI);

  // convergence guard: after removing the analytic tail the remainder should
  // decay like k^{-4}; report failure rather than returning a bad value
  const double resid_tail =
      std::abs(coeff[terms] - c_inf / (static_cast<double>(terms) * terms)) *
      terms / 3.0 * 2.0 / t;
  if (!(resid_tail < tail_tol)) {
    throw std::runtime_error(
        "cf_invert_occupation: series did not converge to the requested "
        "tolerance; increase terms");
  }

  std::vector<double> out(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const double u = s_grid[i] / t;
    double acc = coeff[0];
    for (int k = 1; k <= terms; ++k) {
      const double kk = static_cast<double>(k) * static_cast<double>(k);
      acc += 2.0 * (coeff[k] - c_inf / kk) * std::cos(two_pi * k * u);
    }
    acc += 2.0 * c_inf * M_PI * M_PI * (u * u - u + 1.0 / 6.0);
    out[i] = acc / t;
  }
  return out;
}

}  // namespace ortho

#endif  // ORTHO_ORACLE_HPP
