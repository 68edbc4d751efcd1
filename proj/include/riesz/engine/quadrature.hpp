#ifndef RIESZ_ENGINE_QUADRATURE_HPP
#define RIESZ_ENGINE_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riesz::engine {

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod integration on [a, b] to the requested relative
/// tolerance; throws QuadratureError with diagnostics when the error
/// estimate reaches neither the relative target nor the absolute floor
/// (the floor matters for near-vanishing pieces of a split integral).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_floor = 0.0);

/// Same, with the interval pre-split at the given interior break points
/// (kinks of piecewise-smooth integrands).
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::vector<double> breaks, double rel_tol = 1e-12,
                       double abs_floor = 0.0);

} // namespace riesz::engine

#endif
