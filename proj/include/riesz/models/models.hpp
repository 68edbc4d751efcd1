#ifndef RIESZ_MODELS_MODELS_HPP
#define RIESZ_MODELS_MODELS_HPP

#include "riesz/coeffs/tables.hpp"
#include "riesz/engine/measure.hpp"
#include "riesz/models/manifold.hpp"

#include <utility>
#include <vector>

namespace riesz::models {

using coeffs::DiagonalLambdaCoeffs;
using coeffs::DiagonalOmegaCoeffs;
using coeffs::KernelExpansion;
using exact::ExactScalar;

/// Spectral measure of the observable in the omega variable, with atoms
/// listed up to the cutoff and the truncation certified.  Throws for an
/// unsupported (manifold, observable) pair.
engine::SpectralMeasure spectral_measure(const Manifold& man, const Observable& obs,
                                         double cutoff);

/// The exact expansion coefficients of a supported pair, all four tables at
/// once (they carry the same information in different coordinates).
struct ExpectedCoeffs {
    DiagonalLambdaCoeffs lambda_diag;
    DiagonalOmegaCoeffs omega_diag;
    KernelExpansion heat;
    KernelExpansion cylinder;
};
ExpectedCoeffs expected_coeffs(const Manifold& man, const Observable& obs, int smax);

/// Euler-Maclaurin prediction for the circle diagonal at order s >= 2: the
/// lower-endpoint derivative of the mean integrand weighted by the
/// Bernoulli number.  Returns the pair (c_ss, e_s).
std::pair<ExactScalar, ExactScalar> euler_maclaurin_prediction(const Circle& circle, int s);

/// The half-weight the trapezoidal rule expects at omega = 0.  The interval
/// spectrum is missing it (yielding the -1/2 terms); the circle's zero mode
/// carries double weight, and the net defect is zero.
ExactScalar trapezoid_defect(const Manifold& man);

/// Numerical decay check of the off-diagonal line means: fits the envelope
/// exponent of R^s at (x, y) over the grid and compares with the expected
/// (1 - s)/2 rate (plus slack).
struct DecayReport {
    int s = 0;
    double fitted_exponent = 0;
    double bound = 0;
    bool pass = false;
    std::vector<std::pair<double, double>> envelope;  ///< (lambda, block max |R^s|)
};
DecayReport offdiagonal_decay_check(int s, double x, double y,
                                    const std::vector<double>& lambda_grid);

} // namespace riesz::models

#endif
