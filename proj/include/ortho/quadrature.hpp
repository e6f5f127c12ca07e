#ifndef ORTHO_QUADRATURE_HPP
#define ORTHO_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <utility>

namespace ortho {

/// Adaptive Gauss-Kronrod integration on [a,b]. The nodes are interior, so
/// integrands that are only defined on the open interval are fine.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 int max_depth = 15) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, max_depth, rel_tol);
}

/// Iterated 2-D integral of f(x,y) over the rotated square
/// {|x+y| < L, |x-y| < L}, computed in the coordinates xi = x+y, eta = x-y
/// where the planar laws factorize (Jacobian 1/2).
template <class F>
double integrate_rotated_square(F&& f, double L, double rel_tol = 1e-9) {
  auto outer = [&](double xi) {
    auto inner = [&](double eta) {
      return f(0.5 * (xi + eta), 0.5 * (xi - eta));
    };
    return integrate(inner, -L, L, rel_tol * 0.1);
  };
  return 0.5 * integrate(outer, -L, L, rel_tol);
}

}  // namespace ortho

#endif  // ORTHO_QUADRATURE_HPP
