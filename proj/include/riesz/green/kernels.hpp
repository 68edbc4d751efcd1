#ifndef RIESZ_GREEN_KERNELS_HPP
#define RIESZ_GREEN_KERNELS_HPP

#include "riesz/coeffs/tables.hpp"
#include "riesz/engine/fit.hpp"
#include "riesz/engine/measure.hpp"
#include "riesz/models/manifold.hpp"

#include <utility>
#include <vector>

namespace riesz::green {

using coeffs::KernelKind;
using engine::SpectralMeasure;

/// K(t) = integral of exp(-lambda t) d(mu) with the truncation error
/// certified below tol; throws when no tail certificate is available.
double heat_trace(const SpectralMeasure& mu, double t, double tol = 1e-13);

/// T(t) = integral of exp(-omega t) d(mu); a lambda-tagged measure is
/// converted to the omega variable internally.
double cylinder_trace(const SpectralMeasure& mu, double t, double tol = 1e-13);

/// Closed-form heat and cylinder kernels of the model manifolds at (x, y);
/// theta-type image sums are truncated with a certified Gaussian tail and
/// switch to the Fourier form when pi t / L >= 1.
double model_kernel(const models::Manifold& man, KernelKind kind, double t, double x,
                    double y);

enum class WeightKind { gaussian, sqrt_exp };

/// j-th derivative of exp(-omega^2 t) (gaussian, point = omega) or of
/// exp(-t sqrt(lambda)) (sqrt_exp, point = lambda > 0).
double weight_derivs(WeightKind kind, int j, double t, double point);

/// Exponential integral E_n(t) = integral_1^infty exp(-t w) w^(-n) dw,
/// by series for small t and by quadrature otherwise.
double en_eval(int n, double t);

struct KernelSamples {
    KernelKind kind = KernelKind::heat;
    std::vector<std::pair<double, double>> points;  ///< (t, value), t increasing
    double truncation_bound = 0;
};

struct ExpansionEstimate {
    int m = 1;
    KernelKind kind = KernelKind::heat;
    std::vector<double> coeff;          ///< b_s or e_s estimates, s = 0..smax
    std::vector<double> log_coeff;      ///< f_s estimates (cylinder log slots), else 0
    std::vector<double> coeff_stderr;   ///< standard-error proxies, same order as the basis
    double residual_norm = 0;
    double condition_number = 0;
    std::pair<double, double> window{0, 0};
};

/// Least-squares estimate of the expansion coefficients from kernel
/// samples; the basis follows the kind (half powers for heat, integer
/// powers plus ln t slots at s - m odd positive for cylinder).
ExpansionEstimate fit_kernel_expansion(const KernelSamples& samples, int m, int smax,
                                       double window_min, double window_max,
                                       engine::FitWeighting weighting =
                                           engine::FitWeighting::geometric);

} // namespace riesz::green

#endif
