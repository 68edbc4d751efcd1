#ifndef RIESZ_ENGINE_RIESZ_MEAN_HPP
#define RIESZ_ENGINE_RIESZ_MEAN_HPP

#include "riesz/engine/measure.hpp"
#include "riesz/exact/rational.hpp"

#include <functional>

namespace riesz::engine {

using exact::Rational;

/// R^alpha at argument x: the integral of (1 - sigma/x)^alpha d(mu) over
/// [0, x).  Atoms at x itself are excluded (left continuity); alpha = 0
/// returns mu(x^-).  Arguments beyond a truncated measure's certified range
/// are rejected.
double riesz_mean(const SpectralMeasure& mu, int alpha, double x, double rel_tol = 1e-12);

/// The alpha-fold iterated integral of mu in single-integral form,
/// (1/alpha!) integral of (x - sigma)^alpha d(mu); alpha >= 1.
double riesz_integral(const SpectralMeasure& mu, int alpha, double x, double rel_tol = 1e-12);

/// Square-root / squaring change of variable: positions map to sqrt or
/// square, weights are unchanged, densities pick up the Jacobian.  Tail
/// certificates are transported exactly.
SpectralMeasure change_variable(const SpectralMeasure& mu);

/// Residual of the integral relation between means in two power-law-related
/// variables (lambda = omega^k), evaluated at lambda-argument x for
/// k in {2, 1/2}; contract: |residual| is at quadrature accuracy.
double hardy_identity_residual(const SpectralMeasure& mu, const Rational& k, int alpha,
                               double x, double rel_tol = 1e-12);

/// Residual of the finite linear relation between lambda-means of order
/// alpha and omega-means of orders alpha..alpha*k (integer k >= 2).
double hormander_identity_residual(const SpectralMeasure& mu, int k, int alpha, double x);

/// Smooth integrand weight with derivative evaluators up to a given order;
/// derivative(j, s) evaluates the j-th derivative at s (j = 0 is the value).
struct SmoothWeight {
    int max_order = 0;
    std::function<double(int, double)> derivative;
};

/// R^alpha of f = integral of a d(mu), computed from the means of mu and
/// the derivatives of a alone.  Requires derivative orders up to alpha + 1;
/// the weight must satisfy d^alpha a = o(s^-alpha) at the origin.
double stieltjes_mean(const SmoothWeight& weight, const SpectralMeasure& mu, int alpha,
                      double x, double rel_tol = 1e-12);

} // namespace riesz::engine

#endif
