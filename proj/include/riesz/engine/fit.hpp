#ifndef RIESZ_ENGINE_FIT_HPP
#define RIESZ_ENGINE_FIT_HPP

#include "riesz/engine/measure.hpp"
#include "riesz/exact/rational.hpp"

#include <utility>
#include <vector>

namespace riesz::engine {

using exact::Rational;

/// Samples of one Riesz mean on a grid of arguments.
struct MeanSamples {
    int alpha = 0;
    SpectralVariable variable = SpectralVariable::lambda;
    std::vector<std::pair<double, double>> points;  ///< (x, R(x)), x increasing
};

enum class FitWeighting {
    none,
    geometric,  ///< residuals scaled by 1/|y|: equal relative weight per sample
};

/// Basis {x^p} plus {x^p ln x} where the flag is set; (exponent, flag)
/// pairs must be distinct.
struct FitSpec {
    std::vector<Rational> exponents;
    std::vector<bool> log_flags;
    double window_min = 0;
    double window_max = 0;
    FitWeighting weighting = FitWeighting::none;
};

struct FitResult {
    std::vector<double> coefficients;
    std::vector<double> coefficient_stderr;  ///< least-squares standard-error proxies
    double residual_norm = 0;      ///< weighted RMS residual
    double condition_number = 0;   ///< singular value ratio of the design matrix
    int rank = 0;
    int samples_used = 0;
};

/// Weighted linear least squares of the samples inside the window against
/// the basis.  Throws std::invalid_argument on a rank-deficient design
/// matrix or too few samples.
FitResult asymptotic_fit(const std::vector<std::pair<double, double>>& samples,
                         const FitSpec& spec);

} // namespace riesz::engine

#endif
